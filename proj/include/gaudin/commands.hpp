#pragma once

#include "json.hpp"

#include "gaudin/config.hpp"

namespace gaudin {

/// Full identity suite for the configured family and system; "pass" is true
/// iff every identity is within tolerance.
nlohmann::json cmd_verify(const JobConfig& config);

/// Bethe solutions with formula eigenvalues, matched oracle eigenvalues and
/// eigenvector overlaps.  An empty solution table is data, not failure.
nlohmann::json cmd_bethe(const JobConfig& config);

/// Joint eigenvalue table of the commuting magnet family.
nlohmann::json cmd_spectrum(const JobConfig& config);

/// Least-squares r-matrix fit residual over the configured q grid, with the
/// incompatible r_23 requirement pair and the recovered matrix at q = 0.
nlohmann::json cmd_nogo(const JobConfig& config);

/// Parameter continuation: Hamiltonian-level residuals and (optionally)
/// Bethe roots tracked over sweep.values; optional CSV table.
nlohmann::json cmd_sweep(const JobConfig& config);

/// Reports are deterministic for a fixed config and seed; this strips the
/// one field that is not (wall-clock timing) for byte comparisons.
nlohmann::json strip_timing(nlohmann::json report);

}  // namespace gaudin
