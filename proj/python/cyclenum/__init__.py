"""Exact enumeration of total cyclic orders on {1..n} with prescribed
orientations of the consecutive triples (i, i+1, i+2)."""

from ._core import (
    array_json,
    count_descent_class,
    count_p,
    count_q,
    count_r,
    count_r_alpha,
    densities,
    entringer_triangle,
    euler_numbers,
    forward_f,
    inverse_f,
    oracle_counts,
    q_coefficients,
    r_coefficients,
    triangle,
)

__all__ = [
    "array_json",
    "count_descent_class",
    "count_p",
    "count_q",
    "count_r",
    "count_r_alpha",
    "densities",
    "entringer_triangle",
    "euler_numbers",
    "forward_f",
    "inverse_f",
    "oracle_counts",
    "q_coefficients",
    "r_coefficients",
    "triangle",
]
