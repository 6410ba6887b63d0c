#include "gaudin/spin_system.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gaudin {

SpinSystem::SpinSystem(std::vector<Site> sites, int dimension_cap) : sites_(std::move(sites)) {
  if (sites_.empty()) throw std::invalid_argument("SpinSystem: at least one site required");
  if (dimension_cap < 1) throw std::invalid_argument("SpinSystem: dimension cap must be positive");

  long long dim = 1;
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    double two_s = 2.0 * sites_[i].spin;
    double rounded = std::round(two_s);
    if (!std::isfinite(two_s) || std::abs(two_s - rounded) > 1e-9 || rounded < 1.0) {
      std::ostringstream msg;
      msg << "SpinSystem: spin at site " << i << " is " << sites_[i].spin
          << "; spins must be positive half-integers";
      throw std::invalid_argument(msg.str());
    }
    if (!std::isfinite(sites_[i].u)) {
      std::ostringstream msg;
      msg << "SpinSystem: parameter u at site " << i << " is not finite";
      throw std::invalid_argument(msg.str());
    }
    dim *= static_cast<long long>(rounded) + 1;
    if (dim > dimension_cap) {
      std::ostringstream msg;
      msg << "SpinSystem: Hilbert dimension exceeds cap " << dimension_cap;
      throw std::invalid_argument(msg.str());
    }
  }

  for (std::size_t i = 0; i < sites_.size(); ++i) {
    for (std::size_t j = i + 1; j < sites_.size(); ++j) {
      double scale = std::max({1.0, std::abs(sites_[i].u), std::abs(sites_[j].u)});
      if (std::abs(sites_[i].u - sites_[j].u) <= 1e-12 * scale) {
        std::ostringstream msg;
        msg << "SpinSystem: site parameters must be pairwise distinct; u[" << i << "] = u[" << j
            << "] = " << sites_[i].u;
        throw std::invalid_argument(msg.str());
      }
    }
  }

  dimension_ = static_cast<int>(dim);
}

int SpinSystem::site_dim(std::size_t i) const {
  return static_cast<int>(std::round(2.0 * sites_.at(i).spin)) + 1;
}

double SpinSystem::parameter_spread() const {
  double lo = sites_.front().u, hi = sites_.front().u;
  for (const Site& s : sites_) {
    lo = std::min(lo, s.u);
    hi = std::max(hi, s.u);
  }
  return hi - lo;
}

}  // namespace gaudin
