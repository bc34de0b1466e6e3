#include "djc/config.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace djc {

namespace {

using nlohmann::ordered_json;

double parse_double_str(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: " + what + ": cannot parse number '" + s + "'");
  }
}

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw std::invalid_argument("config: " + field + " " + why);
}

void reject_unknown_keys(const ordered_json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok) fail(where + "." + key, "is not a recognized field");
  }
}

double get_number(const ordered_json& obj, const char* key, const std::string& where,
                  double fallback, bool required = false) {
  if (!obj.contains(key)) {
    if (required) fail(where + "." + key, "is required");
    return fallback;
  }
  const ordered_json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key, "must be a number");
  return v.get<double>();
}

double get_angle(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) return 0.0;
  const ordered_json& v = obj.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return parse_angle_token(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where + "." + key, e.what());
    }
  }
  fail(where + "." + key, "must be a number or a pi-multiple string like \"0.5pi\"");
}

Complex get_complex(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where + "." + key, "is required");
  const ordered_json& v = obj.at(key);
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  fail(where + "." + key, "must be a number or a [re, im] pair");
}

ordered_json complex_to_json(Complex z) {
  if (z.imag() == 0.0) return ordered_json(z.real());
  return ordered_json::array({z.real(), z.imag()});
}

}  // namespace

double parse_angle_token(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty angle token");
  if (token.size() >= 2 && token.compare(token.size() - 2, 2, "pi") == 0) {
    const std::string factor = token.substr(0, token.size() - 2);
    if (factor.empty()) return std::numbers::pi;
    if (factor == "-") return -std::numbers::pi;
    return parse_double_str(factor, "angle token '" + token + "'") * std::numbers::pi;
  }
  return parse_double_str(token, "angle token '" + token + "'");
}

RunConfig parse_run_config(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "must be a JSON object");
  reject_unknown_keys(doc, {"model", "params", "initial", "grid", "observables", "output"},
                      "config");

  RunConfig c;
  if (!doc.contains("model")) fail("config.model", "is required");
  if (!doc.at("model").is_string()) fail("config.model", "must be a string");
  c.model = doc.at("model").get<std::string>();
  if (c.model != "one-atom" && c.model != "two-atom")
    fail("config.model", "must be \"one-atom\" or \"two-atom\", got \"" + c.model + "\"");

  if (doc.contains("params")) {
    const ordered_json& p = doc.at("params");
    if (!p.is_object()) fail("config.params", "must be an object");
    reject_unknown_keys(p, {"omega0", "omega_c", "Omega", "Gamma", "D"}, "config.params");
    c.omega0 = get_number(p, "omega0", "config.params", 0.0);
    c.omega_c = get_number(p, "omega_c", "config.params", 0.0);
    c.Omega = get_number(p, "Omega", "config.params", 1.0);
    c.Gamma = get_number(p, "Gamma", "config.params", 0.0);
    c.D = get_number(p, "D", "config.params", 0.0);
  }

  if (!doc.contains("initial")) fail("config.initial", "is required");
  const ordered_json& init = doc.at("initial");
  if (!init.is_object()) fail("config.initial", "must be an object");
  if (c.model == "one-atom") {
    reject_unknown_keys(init, {"c1", "c2", "theta", "product"}, "config.initial");
    c.c1 = get_number(init, "c1", "config.initial", 0.0, true);
    c.c2 = get_number(init, "c2", "config.initial", 0.0, true);
    c.theta = get_angle(init, "theta", "config.initial");
    if (init.contains("product")) {
      c.product_given = true;
      const ordered_json& prod = init.at("product");
      if (prod.is_string()) {
        if (prod.get<std::string>() != "marginals")
          fail("config.initial.product",
               "string form must be \"marginals\", got \"" + prod.get<std::string>() + "\"");
        c.product_marginals = true;
      } else if (prod.is_object()) {
        reject_unknown_keys(prod, {"b1", "b2", "mode_p0", "mode_p1"}, "config.initial.product");
        c.b1 = get_complex(prod, "b1", "config.initial.product");
        c.b2 = get_complex(prod, "b2", "config.initial.product");
        c.mode_p0 = get_number(prod, "mode_p0", "config.initial.product", 0.0, true);
        c.mode_p1 = get_number(prod, "mode_p1", "config.initial.product", 0.0, true);
      } else {
        fail("config.initial.product", "must be \"marginals\" or an object");
      }
    }
  } else {
    reject_unknown_keys(init, {"c1", "c2", "c3", "theta1", "theta2"}, "config.initial");
    c.c1 = get_number(init, "c1", "config.initial", 0.0, true);
    c.c2 = get_number(init, "c2", "config.initial", 0.0, true);
    c.c3 = get_number(init, "c3", "config.initial", 0.0, true);
    c.theta1 = get_angle(init, "theta1", "config.initial");
    c.theta2 = get_angle(init, "theta2", "config.initial");
  }

  if (doc.contains("grid")) {
    const ordered_json& g = doc.at("grid");
    if (!g.is_object()) fail("config.grid", "must be an object");
    reject_unknown_keys(g, {"t_end", "n_points"}, "config.grid");
    c.t_end = get_number(g, "t_end", "config.grid", c.t_end);
    const double np = get_number(g, "n_points", "config.grid", c.n_points);
    if (np != std::floor(np) || np < 2) fail("config.grid.n_points", "must be an integer >= 2");
    c.n_points = static_cast<int>(np);
  }

  if (doc.contains("observables")) {
    const ordered_json& obs = doc.at("observables");
    if (!obs.is_array()) fail("config.observables", "must be an array of names");
    for (const ordered_json& o : obs) {
      if (!o.is_string()) fail("config.observables", "must contain only strings");
      c.observables.push_back(o.get<std::string>());
    }
  }

  if (doc.contains("output")) {
    const ordered_json& out = doc.at("output");
    if (!out.is_object()) fail("config.output", "must be an object");
    reject_unknown_keys(out, {"path", "format"}, "config.output");
    if (out.contains("path")) {
      if (!out.at("path").is_string()) fail("config.output.path", "must be a string");
      c.out_path = out.at("path").get<std::string>();
    }
    if (out.contains("format")) {
      if (!out.at("format").is_string()) fail("config.output.format", "must be a string");
      c.format = out.at("format").get<std::string>();
      if (c.format != "csv" && c.format != "json")
        fail("config.output.format", "must be \"csv\" or \"json\", got \"" + c.format + "\"");
    }
  }
  return c;
}

std::string serialize_run_config(const RunConfig& c) {
  ordered_json doc;
  doc["model"] = c.model;
  doc["params"] = {{"omega0", c.omega0},
                   {"omega_c", c.omega_c},
                   {"Omega", c.Omega},
                   {"Gamma", c.Gamma},
                   {"D", c.D}};
  ordered_json init;
  if (c.model == "one-atom") {
    init["c1"] = c.c1;
    init["c2"] = c.c2;
    init["theta"] = c.theta;
    if (c.product_given) {
      if (c.product_marginals) {
        init["product"] = "marginals";
      } else {
        init["product"] = {{"b1", complex_to_json(c.b1)},
                           {"b2", complex_to_json(c.b2)},
                           {"mode_p0", c.mode_p0},
                           {"mode_p1", c.mode_p1}};
      }
    }
  } else {
    init["c1"] = c.c1;
    init["c2"] = c.c2;
    init["c3"] = c.c3;
    init["theta1"] = c.theta1;
    init["theta2"] = c.theta2;
  }
  doc["initial"] = init;
  doc["grid"] = {{"t_end", c.t_end}, {"n_points", c.n_points}};
  if (!c.observables.empty()) doc["observables"] = c.observables;
  doc["output"] = {{"path", c.out_path}, {"format", c.format}};
  return doc.dump(2);
}

Scenario scenario_from_config(const RunConfig& c, const std::string& name) {
  Scenario s;
  s.name = name;
  s.title = "custom run";
  s.grid = TimeGrid(0.0, c.t_end, c.n_points);
  const ModelParams params(c.omega0, c.omega_c, c.Omega, c.Gamma, c.D);

  if (c.model == "one-atom") {
    s.model = ModelKind::one_atom;
    const CorrelatedInit corr(c.c1, c.c2, c.theta);
    std::optional<ProductInit> prod;
    if (c.product_given)
      prod = c.product_marginals ? product_from_marginals(corr)
                                 : ProductInit(c.b1, c.b2, c.mode_p0, c.mode_p1);
    s.observables = c.observables;
    if (s.observables.empty()) {
      s.observables = {"ptilde_corr"};
      if (prod.has_value()) {
        s.observables.push_back("ptilde_prod");
        s.observables.push_back("distance");
        s.shared_observables = {"bound_i", "bound_d0_plus_i"};
      }
    }
    s.runs.push_back(ScenarioRun{"run", params, OneAtomRun{corr, prod}});
  } else {
    s.model = ModelKind::two_atom;
    s.observables = c.observables;
    if (s.observables.empty()) s.observables = {"concurrence", "concurrence_steady"};
    s.runs.push_back(
        ScenarioRun{"run", params, TwoAtomRun{TwoAtomInit(c.c1, c.c2, c.c3, c.theta1, c.theta2)}});
  }
  return s;
}

}  // namespace djc
