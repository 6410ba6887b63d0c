#pragma once

#include <cstddef>
#include <vector>

#include "gaudin/types.hpp"

namespace gaudin {

struct Site {
  double spin;  // half-integer s >= 1/2
  double u;     // real site parameter
};

/// N spin sites, each carrying a spin s_j and a real parameter u_j.
/// All u_j must be pairwise distinct and every 2*s_j a positive integer.
/// The tensor-product Hilbert space has dimension D = prod_j (2 s_j + 1),
/// capped to keep everything at dense desk scale.
class SpinSystem {
 public:
  static constexpr int kDefaultDimensionCap = 4096;

  explicit SpinSystem(std::vector<Site> sites, int dimension_cap = kDefaultDimensionCap);

  std::size_t size() const { return sites_.size(); }
  double spin(std::size_t i) const { return sites_.at(i).spin; }
  double u(std::size_t i) const { return sites_.at(i).u; }
  const std::vector<Site>& sites() const { return sites_; }

  /// Local dimension 2*s_i + 1.
  int site_dim(std::size_t i) const;

  /// Total Hilbert-space dimension D.
  int dimension() const { return dimension_; }

  /// Spread max(u) - min(u); used to scale sampling heuristics.
  double parameter_spread() const;

 private:
  std::vector<Site> sites_;
  int dimension_ = 1;
};

}  // namespace gaudin
