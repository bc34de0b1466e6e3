#pragma once

#include <vector>

#include "djc/types.hpp"

namespace djc {

/// Largest absolute entry of m - m^dagger.
double hermiticity_defect(const ComplexMatrix& m);

/// Kronecker product, row-major convention: (a kron b)(i*p+k, j*q+l) = a(i,j) b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a Hermitian matrix, ascending. Closed form for dim <= 2,
/// cyclic complex Jacobi sweeps above that. Supported up to dim 16; rejects
/// matrices whose hermiticity defect exceeds 1e-10.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]; unitary
};

/// Full eigensystem under the same contract as hermitian_eigenvalues.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Principal square root of a positive-semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-9, 0) are clamped to zero; anything lower is rejected.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

/// Validated density matrix: Hermitian (defect <= 1e-10), unit trace
/// (|Tr - 1| <= 1e-9), eigenvalues >= -1e-9. Immutable after construction.
class DensityMatrix {
 public:
  /// Validates and wraps; throws std::invalid_argument naming the failed check.
  static DensityMatrix from_matrix(const ComplexMatrix& m);
  /// Diagonal state from a probability vector (same tolerances).
  static DensityMatrix diagonal(const std::vector<double>& populations);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Trace distance (1/2) * trace-norm of the difference; clamped into [0, 1].
/// Requires equal dimensions.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace djc
