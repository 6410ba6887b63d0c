"""Commuting Gaudin spin Hamiltonians, algebraic Bethe ansatz and r-matrix checks.

The heavy lifting lives in the C++ extension ``gaudin._core``; this package
re-exports its public surface.
"""

from gaudin._core import (  # noqa: F401
    CouplingFamily,
    GeneratorRealization,
    MagnetSet,
    SpinSystem,
    algebra_residuals,
    bethe_eigenvalue,
    bethe_residual,
    bethe_vector,
    build_magnets,
    commutator_norm,
    cybe_residual,
    dot_product,
    embed,
    exact_spectrum,
    gaudin_residual,
    generator,
    linear_structure_residual,
    lowest_weight_eigenvalue,
    lowest_weight_vector,
    magnet_eigenvalues_from_roots,
    no_go_probe,
    permutation_matrix,
    qcybe_residual,
    rational_r,
    residue_at,
    rq,
    run_command,
    simultaneous_spectrum,
    single_spin_generators,
    solve_bethe,
    spectral_operator,
    sum_rule_check,
    symmetry_defect,
    total_magnetization,
    trace_formula_check,
    w,
    weight_function,
    weight_function_derivative,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
