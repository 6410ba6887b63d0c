#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gaudin {

struct IdentityEntry {
  std::string id;         // stable machine-readable name
  std::string statement;  // the identity being checked, human readable
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Named residuals with tolerances; overall pass iff every entry passes.
class IdentityReport {
 public:
  void add(std::string id, std::string statement, double residual, double tolerance);
  const std::vector<IdentityEntry>& entries() const { return entries_; }
  const IdentityEntry& entry(const std::string& id) const;

  bool all_pass() const;
  double max_residual() const;

  nlohmann::json to_json() const;
  static IdentityReport from_json(const nlohmann::json& j);

 private:
  std::vector<IdentityEntry> entries_;
};

}  // namespace gaudin
