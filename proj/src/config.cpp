#include "gaudin/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gaudin {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError("config: " + where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("config: unknown field \"" + key + "\" in " + where);
    }
  }
}

double get_number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError("config: missing field \"" + key + "\" in " + where);
  if (!obj.at(key).is_number()) {
    throw ConfigError("config: field \"" + key + "\" in " + where + " must be a number");
  }
  return obj.at(key).get<double>();
}

Complex get_complex(const json& obj, const std::string& where) {
  check_keys(obj, {"re", "im"}, where);
  return {get_number(obj, "re", where), get_number(obj, "im", where)};
}

SpinSystem parse_system(const json& j) {
  check_keys(j, {"sites", "dimension_cap"}, "system");
  if (!j.contains("sites") || !j.at("sites").is_array() || j.at("sites").empty()) {
    throw ConfigError("config: system.sites must be a nonempty array");
  }
  std::vector<Site> sites;
  for (const auto& s : j.at("sites")) {
    check_keys(s, {"spin", "u"}, "system.sites entry");
    sites.push_back({get_number(s, "spin", "site"), get_number(s, "u", "site")});
  }
  int cap = SpinSystem::kDefaultDimensionCap;
  if (j.contains("dimension_cap")) {
    cap = static_cast<int>(get_number(j, "dimension_cap", "system"));
  }
  try {
    return SpinSystem(std::move(sites), cap);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

CouplingFamily parse_family(const json& j) {
  check_keys(j, {"name", "p", "q"}, "family");
  if (!j.contains("name") || !j.at("name").is_string()) {
    throw ConfigError("config: family.name must be a string");
  }
  std::string name = j.at("name").get<std::string>();
  auto reject_param = [&](const char* key) {
    if (j.contains(key)) {
      throw ConfigError("config: family \"" + name + "\" does not take parameter \"" + key +
                        "\"");
    }
  };
  try {
    if (name == "rational") {
      reject_param("p");
      reject_param("q");
      return CouplingFamily::rational();
    }
    if (name == "trigonometric" || name == "hyperbolic") {
      reject_param("q");
      double p = get_number(j, "p", "family");
      if (p == 0.0) {
        throw ConfigError("config: family parameter p = 0 is the rational family; set "
                          "family.name to \"rational\"");
      }
      return name == "trigonometric" ? CouplingFamily::trigonometric(p)
                                     : CouplingFamily::hyperbolic(p);
    }
    if (name == "q-deformed") {
      reject_param("p");
      double q = get_number(j, "q", "family");
      if (q == 0.0) {
        throw ConfigError("config: q = 0 is the rational family; set family.name to "
                          "\"rational\"");
      }
      return CouplingFamily::q_deformed(q);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  throw ConfigError("config: unknown family \"" + name +
                    "\"; expected rational, trigonometric, hyperbolic or q-deformed");
}

}  // namespace

JobConfig parse_config(const json& doc) {
  check_keys(doc, {"system", "family", "seed", "tol_scale", "tolerances", "verify", "bethe",
                   "nogo", "sweep"},
             "top level");
  if (!doc.contains("system")) throw ConfigError("config: missing \"system\"");
  if (!doc.contains("family")) throw ConfigError("config: missing \"family\"");

  JobConfig cfg{parse_system(doc.at("system")), parse_family(doc.at("family"))};

  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned() && !doc.at("seed").is_number_integer()) {
      throw ConfigError("config: seed must be an integer");
    }
    cfg.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("tol_scale")) {
    cfg.tol_scale = get_number(doc, "tol_scale", "top level");
    if (cfg.tol_scale <= 0.0) throw ConfigError("config: tol_scale must be positive");
  }
  if (doc.contains("tolerances")) {
    if (!doc.at("tolerances").is_object()) {
      throw ConfigError("config: tolerances must be an object of id -> tolerance");
    }
    for (const auto& [key, value] : doc.at("tolerances").items()) {
      if (!value.is_number() || value.get<double>() <= 0.0) {
        throw ConfigError("config: tolerance \"" + key + "\" must be a positive number");
      }
      cfg.tolerance_overrides[key] = value.get<double>();
    }
  }
  if (doc.contains("verify")) {
    const json& v = doc.at("verify");
    check_keys(v, {"triples", "lambda_pairs"}, "verify");
    if (v.contains("triples")) cfg.verify.triples = static_cast<int>(get_number(v, "triples", "verify"));
    if (v.contains("lambda_pairs")) {
      cfg.verify.lambda_pairs = static_cast<int>(get_number(v, "lambda_pairs", "verify"));
    }
    if (cfg.verify.triples < 1 || cfg.verify.lambda_pairs < 1) {
      throw ConfigError("config: verify.triples and verify.lambda_pairs must be >= 1");
    }
  }
  if (doc.contains("bethe")) {
    const json& b = doc.at("bethe");
    check_keys(b, {"n", "seeds"}, "bethe");
    BetheSettings bs;
    bs.n = static_cast<int>(get_number(b, "n", "bethe"));
    if (bs.n < 1) throw ConfigError("config: bethe.n must be >= 1");
    double bound = 0.0;
    for (std::size_t i = 0; i < cfg.system.size(); ++i) bound += 2.0 * cfg.system.spin(i);
    if (static_cast<double>(bs.n) > bound + 1e-9) {
      std::ostringstream msg;
      msg << "config: bethe.n = " << bs.n << " exceeds the magnetization bound sum(2 s_j) = "
          << bound;
      throw ConfigError(msg.str());
    }
    if (b.contains("seeds")) {
      if (!b.at("seeds").is_array()) throw ConfigError("config: bethe.seeds must be an array");
      for (const auto& seed_set : b.at("seeds")) {
        if (!seed_set.is_array() || static_cast<int>(seed_set.size()) != bs.n) {
          throw ConfigError("config: each bethe.seeds entry must list n roots");
        }
        std::vector<Complex> roots;
        for (const auto& r : seed_set) roots.push_back(get_complex(r, "bethe.seeds root"));
        bs.seeds.push_back(std::move(roots));
      }
    }
    cfg.bethe = std::move(bs);
  }
  if (doc.contains("nogo")) {
    const json& g = doc.at("nogo");
    check_keys(g, {"q_grid", "lambda", "mu"}, "nogo");
    NoGoSettings ns;
    if (g.contains("q_grid")) {
      if (!g.at("q_grid").is_array() || g.at("q_grid").empty()) {
        throw ConfigError("config: nogo.q_grid must be a nonempty array");
      }
      ns.q_grid.clear();
      for (const auto& q : g.at("q_grid")) {
        if (!q.is_number()) throw ConfigError("config: nogo.q_grid entries must be numbers");
        ns.q_grid.push_back(q.get<double>());
      }
    }
    if (g.contains("lambda")) ns.lambda = get_complex(g.at("lambda"), "nogo.lambda");
    if (g.contains("mu")) ns.mu = get_complex(g.at("mu"), "nogo.mu");
    if (std::abs(ns.lambda - ns.mu) < 1e-9) {
      throw ConfigError("config: nogo.lambda and nogo.mu must differ");
    }
    cfg.nogo = std::move(ns);
  }
  if (doc.contains("sweep")) {
    const json& s = doc.at("sweep");
    check_keys(s, {"values", "bethe_n", "csv"}, "sweep");
    SweepSettings ss;
    if (!s.contains("values") || !s.at("values").is_array() || s.at("values").empty()) {
      throw ConfigError("config: sweep.values must be a nonempty array");
    }
    for (const auto& v : s.at("values")) {
      if (!v.is_number() || v.get<double>() == 0.0) {
        throw ConfigError("config: sweep.values must be nonzero numbers (the zero-parameter "
                          "limit is the rational family)");
      }
      ss.values.push_back(v.get<double>());
    }
    if (s.contains("bethe_n")) ss.bethe_n = static_cast<int>(get_number(s, "bethe_n", "sweep"));
    if (s.contains("csv")) {
      if (!s.at("csv").is_string()) throw ConfigError("config: sweep.csv must be a path string");
      ss.csv_path = s.at("csv").get<std::string>();
    }
    if (!cfg.family.has_param()) {
      throw ConfigError("config: sweep requires a parametric family (trigonometric, hyperbolic "
                        "or q-deformed)");
    }
    cfg.sweep = std::move(ss);
  }
  return cfg;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: JSON parse error: ") + e.what());
  }
  return parse_config(doc);
}

}  // namespace gaudin
