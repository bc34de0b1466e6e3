#include "djc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace djc {

namespace {

constexpr int kMaxDim = 16;
constexpr double kHermTol = 1e-10;
constexpr double kOffDiagRel = 1e-14;  // Jacobi zeroing threshold, relative to scale
constexpr int kMaxSweeps = 64;

void check_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
}

void check_hermitian_input(const ComplexMatrix& m, const char* who) {
  check_square(m, who);
  if (m.rows() > kMaxDim)
    throw std::invalid_argument(std::string(who) + ": dimension " + std::to_string(m.rows()) +
                                " exceeds supported maximum " + std::to_string(kMaxDim));
  const double defect = hermiticity_defect(m);
  if (!(defect <= kHermTol))
    throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
}

// One cyclic sweep of two-sided complex Jacobi rotations on A, accumulating
// the similarity transform into V. Off-diagonal entries at or below
// kOffDiagRel * scale are set to zero instead of rotated (perturbing the
// eigenvalues by at most a small multiple of that), which guarantees the
// sweep count stays finite. Returns the number of rotations performed;
// zero means converged.
int jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v, double scale) {
  const Eigen::Index n = a.rows();
  int rotations = 0;
  for (Eigen::Index p = 0; p < n - 1; ++p) {
    for (Eigen::Index q = p + 1; q < n; ++q) {
      const Complex apq = a(p, q);
      const double mag = std::abs(apq);
      if (mag <= kOffDiagRel * scale) {
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
        continue;
      }
      ++rotations;
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const Complex phase = apq / mag;
      const double tau = (aqq - app) / (2.0 * mag);
      const double tt = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + tt * tt);
      const double s = tt * c;
      // Columns: [p q] <- [p q] * [[c, s*phase], [-s*conj(phase), c]]
      for (Eigen::Index k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(phase) * akq;
        a(k, q) = s * phase * akp + c * akq;
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - s * std::conj(phase) * vkq;
        v(k, q) = s * phase * vkp + c * vkq;
      }
      // Rows: conjugate-transpose action.
      for (Eigen::Index k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * std::conj(phase) * apk + c * aqk;
      }
      a(p, q) = Complex(0.0, 0.0);
      a(q, p) = Complex(0.0, 0.0);
      a(p, p) = Complex(a(p, p).real(), 0.0);
      a(q, q) = Complex(a(q, q).real(), 0.0);
    }
  }
  return rotations;
}

EigenSystem eigensystem_unchecked(const ComplexMatrix& m) {
  const Eigen::Index n = m.rows();
  EigenSystem sys;
  if (n == 1) {
    sys.values = {m(0, 0).real()};
    sys.vectors = ComplexMatrix::Identity(1, 1);
    return sys;
  }
  if (n == 2) {
    // Closed form: eigenvalues of [[a, b], [conj(b), d]].
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const Complex b = m(0, 1);
    const double mean = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), std::abs(b));
    sys.values = {mean - rad, mean + rad};
    sys.vectors = ComplexMatrix::Identity(2, 2);
    if (std::abs(b) > 0.0 || a > d) {
      for (int k = 0; k < 2; ++k) {
        const double lam = sys.values[static_cast<size_t>(k)];
        ComplexVector vvec(2);
        // (a - lam) x + b y = 0; pick the better-conditioned row.
        if (std::abs(a - lam) >= std::abs(d - lam)) {
          vvec << b, Complex(lam - a);
        } else {
          vvec << Complex(lam - d), std::conj(b);
        }
        const double nrm = vvec.norm();
        if (nrm > 0.0) {
          vvec /= nrm;
        } else {
          vvec.setZero();
          vvec[k] = 1.0;
        }
        sys.vectors.col(k) = vvec;
      }
    }
    return sys;
  }

  ComplexMatrix a = 0.5 * (m + m.adjoint());  // symmetrize roundoff away
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double scale = a.cwiseAbs().maxCoeff();
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (jacobi_sweep(a, v, scale) == 0) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error("hermitian_eigensystem: Jacobi sweeps did not converge");

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  sys.values.resize(static_cast<size_t>(n));
  sys.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sys.values[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)],
                                           order[static_cast<size_t>(k)]).real();
    sys.vectors.col(k) = v.col(order[static_cast<size_t>(k)]);
  }
  return sys;
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& m) {
  check_square(m, "hermiticity_defect");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  check_hermitian_input(m, "hermitian_eigenvalues");
  return eigensystem_unchecked(m).values;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
  check_hermitian_input(m, "hermitian_eigensystem");
  return eigensystem_unchecked(m);
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  check_hermitian_input(m, "matrix_sqrt_psd");
  EigenSystem sys = eigensystem_unchecked(m);
  const double floor = -1e-9 * std::max(1.0, std::abs(sys.values.back()));
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (size_t k = 0; k < sys.values.size(); ++k) {
    double lam = sys.values[k];
    if (lam < floor)
      throw std::invalid_argument("matrix_sqrt_psd: eigenvalue " + std::to_string(lam) +
                                  " is negative beyond tolerance");
    lam = std::max(lam, 0.0);
    const Eigen::Index kk = static_cast<Eigen::Index>(k);
    out += std::sqrt(lam) * (sys.vectors.col(kk) * sys.vectors.col(kk).adjoint());
  }
  return 0.5 * (out + out.adjoint());  // kill accumulation roundoff
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
  check_square(m, "DensityMatrix");
  if (m.rows() > kMaxDim)
    throw std::invalid_argument("DensityMatrix: dimension " + std::to_string(m.rows()) +
                                " exceeds supported maximum " + std::to_string(kMaxDim));
  const double herm = hermiticity_defect(m);
  if (!(herm <= kHermTol))
    throw std::invalid_argument("DensityMatrix: not Hermitian (defect " + std::to_string(herm) +
                                ")");
  const double trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
  if (!(trace_defect <= 1e-9))
    throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                std::to_string(trace_defect));
  const std::vector<double> evals = eigensystem_unchecked(0.5 * (m + m.adjoint())).values;
  if (evals.front() < -1e-9)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(evals.front()));
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& populations) {
  const Eigen::Index n = static_cast<Eigen::Index>(populations.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = populations[static_cast<size_t>(i)];
  return from_matrix(m);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("trace_distance: dimension mismatch " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
  const std::vector<double> evals = eigensystem_unchecked(a.matrix() - b.matrix()).values;
  double sum = 0.0;
  for (double lam : evals) sum += std::abs(lam);
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

}  // namespace djc
