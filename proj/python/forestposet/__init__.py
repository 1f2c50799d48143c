"""Intervals of the poset of leaf-labeled rooted binary forests."""

from ._core import (
    NotComparableError,
    ParseError,
    brute_chi,
    canonical,
    chi,
    enumerate_forests,
    enumerate_trees,
    exponents,
    hasse_dot,
    interval,
    leq,
    m_poly,
    marked_vertices,
    mobius,
    trace,
    verify,
    z_poly,
)

__all__ = [
    "NotComparableError",
    "ParseError",
    "brute_chi",
    "canonical",
    "chi",
    "enumerate_forests",
    "enumerate_trees",
    "exponents",
    "hasse_dot",
    "interval",
    "leq",
    "m_poly",
    "marked_vertices",
    "mobius",
    "trace",
    "verify",
    "z_poly",
]
