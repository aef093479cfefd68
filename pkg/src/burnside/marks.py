"""Mark homomorphism for the ordered-set-partition basis.

The mark of a G-set at a conjugacy class is its number of fixed points
under any representative.  Conjugacy classes of S_n are cycle types, i.e.
partitions of n, so the marks of an element form an integer vector indexed
by partitions of n.  Marks are ring homomorphisms to Z componentwise, and
the matrix of basis marks is triangular with nonzero diagonal, which makes
the whole vector a complete invariant.

A tuple of disjoint blocks covering {1..n} is fixed by a permutation g
exactly when every cycle of g stays inside a single block, so the fixed
points of [P_mu] at cycle type nu are counted by distributing the cycles
of nu over the ordered blocks with block r receiving total length mu_r.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition, enumerate_partitions
from .schur import SchurElement


@lru_cache(maxsize=None)
def _placements(cycles: tuple, caps: tuple) -> int:
    """Ways to assign distinguishable cycles (lengths `cycles`, processed in
    the given order) to distinguishable blocks whose remaining capacities
    form the multiset `caps`, filling every block exactly.

    Blocks with equal remaining capacity admit the same completions, so the
    state keeps capacities sorted and weights each choice by the number of
    blocks sharing the chosen capacity.  Exhausted blocks are dropped.
    """
    if not cycles:
        return 1
    length, rest = cycles[0], cycles[1:]
    total = 0
    for cap in set(caps):
        if cap >= length:
            reduced = list(caps)
            reduced.remove(cap)
            if cap > length:
                reduced.append(cap - length)
            total += caps.count(cap) * _placements(rest, tuple(sorted(reduced)))
    return total


def fixed_points(mu, nu) -> int:
    """Fixed points of the basis G-set of mu under a permutation of cycle
    type nu; both arguments must be partitions of the same n."""
    mu, nu = Partition(mu), Partition(nu)
    if mu.weight != nu.weight:
        raise ValueError(
            f"cycle type {nu} and block sizes {mu} have different weights"
        )
    return _placements(tuple(nu), tuple(sorted(mu)))


def marks_vector_order(n: int) -> list[Partition]:
    """Row/column index order used throughout: descending lexicographic."""
    return list(enumerate_partitions(n))


def mark_matrix(n: int) -> list[list[int]]:
    """Matrix of basis marks: rows are cycle types nu, columns basis keys mu,
    both in descending lexicographic order; entry = fixed_points(mu, nu).

    Lower-triangular: a cycle of length bigger than every block cannot be
    placed, and more precisely the entry vanishes whenever nu > mu."""
    order = marks_vector_order(n)
    return [[fixed_points(mu, nu) for mu in order] for nu in order]


@dataclass(frozen=True)
class MarkVector:
    """Marks of one element at every cycle type, in descending lex order."""

    ambient: int
    cycle_types: tuple
    values: tuple

    def to_json(self) -> dict:
        return {
            "n": self.ambient,
            "marks": [
                {"cycle_type": list(nu), "value": v}
                for nu, v in zip(self.cycle_types, self.values)
            ],
        }

    def render(self) -> str:
        lines = []
        for nu, v in zip(self.cycle_types, self.values):
            body = ",".join(str(p) for p in nu)
            lines.append(f"({body}): {v}")
        return "\n".join(lines)


def marks_of(x: SchurElement) -> MarkVector:
    """Mark vector of an element, extended linearly from the basis."""
    order = marks_vector_order(x.ambient)
    values = tuple(
        sum(c * fixed_points(mu, nu) for mu, c in x.coeffs.items()) for nu in order
    )
    return MarkVector(x.ambient, tuple(order), values)


def verify_injectivity(n: int) -> dict:
    """Check the structural facts that make the mark vector injective at
    ambient n: entries above the diagonal vanish and diagonal entries do not.
    Returns a report with every offending cell (empty failures means pass).
    """
    order = marks_vector_order(n)
    failures = []
    diagonal = []
    for r, nu in enumerate(order):
        for c, mu in enumerate(order):
            value = fixed_points(mu, nu)
            if r == c:
                diagonal.append(value)
                if value == 0:
                    failures.append(
                        {
                            "cycle_type": list(nu),
                            "basis_key": list(mu),
                            "value": 0,
                            "reason": "zero diagonal entry",
                        }
                    )
            elif r < c and value != 0:
                failures.append(
                    {
                        "cycle_type": list(nu),
                        "basis_key": list(mu),
                        "value": value,
                        "reason": "nonzero entry above the diagonal",
                    }
                )
    return {
        "n": n,
        "triangular": all(f["reason"] != "nonzero entry above the diagonal" for f in failures),
        "diagonal_nonzero": all(d != 0 for d in diagonal),
        "diagonal": diagonal,
        "cells_checked": len(order) * len(order),
        "failures": failures,
    }
