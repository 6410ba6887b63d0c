#include "gaudin/report.hpp"

#include <stdexcept>

namespace gaudin {

void IdentityReport::add(std::string id, std::string statement, double residual,
                         double tolerance) {
  entries_.push_back({std::move(id), std::move(statement), residual, tolerance,
                      residual <= tolerance});
}

const IdentityEntry& IdentityReport::entry(const std::string& id) const {
  for (const IdentityEntry& e : entries_) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("IdentityReport: no entry named " + id);
}

bool IdentityReport::all_pass() const {
  for (const IdentityEntry& e : entries_) {
    if (!e.pass) return false;
  }
  return true;
}

double IdentityReport::max_residual() const {
  double r = 0.0;
  for (const IdentityEntry& e : entries_) r = std::max(r, e.residual);
  return r;
}

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const IdentityEntry& e : entries_) {
    arr.push_back({{"id", e.id},
                   {"statement", e.statement},
                   {"residual", e.residual},
                   {"tolerance", e.tolerance},
                   {"pass", e.pass}});
  }
  return arr;
}

IdentityReport IdentityReport::from_json(const nlohmann::json& j) {
  IdentityReport r;
  for (const auto& e : j) {
    r.entries_.push_back({e.at("id").get<std::string>(), e.at("statement").get<std::string>(),
                          e.at("residual").get<double>(), e.at("tolerance").get<double>(),
                          e.at("pass").get<bool>()});
  }
  return r;
}

}  // namespace gaudin
