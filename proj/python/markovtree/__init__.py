"""Markov triple tree explorer: exact integer results from a C++ core."""

from ._core import (
    MarkovError,
    children,
    cycle_length,
    cycle_residues,
    discriminant,
    edge_region_number,
    edge_square_lists,
    edge_triplet,
    enumerate,
    farey_for_region,
    generate_solutions,
    is_markov,
    is_palindromic_cycle,
    k_sf,
    last_digit_frequency,
    lucas_U,
    lucas_V,
    parent,
    parity_type,
    plot_points,
    q_decompose,
    sibling_number,
    solve_pell,
    triplet_for_region,
    uniqueness_check,
)

__all__ = [
    "MarkovError",
    "children",
    "cycle_length",
    "cycle_residues",
    "discriminant",
    "edge_region_number",
    "edge_square_lists",
    "edge_triplet",
    "enumerate",
    "farey_for_region",
    "generate_solutions",
    "is_markov",
    "is_palindromic_cycle",
    "k_sf",
    "last_digit_frequency",
    "lucas_U",
    "lucas_V",
    "parent",
    "parity_type",
    "plot_points",
    "q_decompose",
    "sibling_number",
    "solve_pell",
    "triplet_for_region",
    "uniqueness_check",
]
