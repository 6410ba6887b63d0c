#pragma once

#include "gaudin/spin_system.hpp"
#include "gaudin/types.hpp"

namespace gaudin {

/// SU(2) generator component: t^0, t^+ or t^-.
enum class Component { Zero, Plus, Minus };

struct SpinMatrices {
  Matrix t0, tplus, tminus;  // dimension (2s+1) x (2s+1)
};

/// Spin-s representation matrices in the basis ordered by t^0 eigenvalue
/// descending (m = s, s-1, ..., -s), Condon-Shortley phase so that t^+/t^-
/// have real nonnegative entries.  Satisfy [t^+, t^-] = 2 t^0 and
/// [t^0, t^+-] = +- t^+-.
SpinMatrices single_spin_generators(double s);

/// I x ... x t_i^which x ... x I on the full tensor-product space, with the
/// leftmost Kronecker factor belonging to site 0.
Matrix embed(const SpinSystem& system, std::size_t site, Component which);

/// t_i . t_j = t_i^0 t_j^0 + (t_i^+ t_j^- + t_i^- t_j^+) / 2.
/// For i = j this is the site Casimir s_i (s_i + 1) * I.
Matrix dot_product(const SpinSystem& system, std::size_t i, std::size_t j);

/// Total magnetization T = sum_j t_j^0.
Matrix total_magnetization(const SpinSystem& system);

/// Unit tensor product of the m_j = -s_j states; annihilated by every
/// lowering generator.  With the descending basis ordering this is the last
/// standard basis vector.
Vector lowest_weight_vector(const SpinSystem& system);

}  // namespace gaudin
