"""q-Ehrhart series of lattice polytopes through harmonic spaces of their lattice points."""

from ._core import (
    beta_bound,
    chain_order_equality,
    closure_check,
    closure_check_modp,
    corpus,
    corpus_names,
    equivariant_series,
    expand,
    generation_check,
    guess,
    harmonic_basis,
    harmonic_dims_modp,
    hilbert_series,
    interior_lattice_points,
    iq,
    iq_interior,
    lattice_points,
    reciprocity_check,
    same_function,
    series_E,
    series_Ebar,
    verify,
)

__all__ = [
    "beta_bound",
    "chain_order_equality",
    "closure_check",
    "closure_check_modp",
    "corpus",
    "corpus_names",
    "equivariant_series",
    "expand",
    "generation_check",
    "guess",
    "harmonic_basis",
    "harmonic_dims_modp",
    "hilbert_series",
    "interior_lattice_points",
    "iq",
    "iq_interior",
    "lattice_points",
    "reciprocity_check",
    "same_function",
    "series_E",
    "series_Ebar",
    "verify",
]
