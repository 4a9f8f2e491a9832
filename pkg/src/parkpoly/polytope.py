"""Brute-force polytope oracle over explicit inequality lists.

Rows are ``(normal, rhs)`` pairs meaning ``normal . x <= rhs``.  Everything is
exact and exponential; callers guard the sizes.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .arith import RationalMatrix, affine_rank, rank

Row = tuple[tuple[int, ...], int]


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def hrep_vertices(rows: Sequence[Row]) -> set[tuple[Fraction, ...]]:
    """Vertices of {x : A x <= c}, by solving every square subsystem."""
    if not rows:
        return set()
    dim = len(rows[0][0])
    out = set()
    for idx in combinations(range(len(rows)), dim):
        sol = RationalMatrix([rows[i][0] for i in idx]).solve([rows[i][1] for i in idx])
        if sol is None or sol in out:
            continue
        if all(_dot(a, sol) <= c for a, c in rows):
            out.add(sol)
    return out


def tight_rows(rows: Sequence[Row], pt: Sequence) -> list[int]:
    return [i for i, (a, c) in enumerate(rows) if _dot(a, pt) == c]


def is_vertex_certificate(rows: Sequence[Row], pt: Sequence) -> bool:
    """pt is feasible and its tight normals span the whole space."""
    if any(_dot(a, pt) > c for a, c in rows):
        return False
    normals = [rows[i][0] for i in tight_rows(rows, pt)]
    return rank(normals) == len(pt)


class FaceLattice:
    """Nonempty faces of a polytope, each stored as a frozenset of vertex indices."""

    def __init__(self, vertices: Iterable[Sequence], rows: Sequence[Row]):
        self.vertices = sorted(tuple(v) for v in vertices)
        self.rows = list(rows)
        self.dim = affine_rank(self.vertices)
        everything = frozenset(range(len(self.vertices)))
        self._dims: dict[frozenset[int], int] = {everything: self.dim}

        facets = set()
        for a, c in self.rows:
            tight = frozenset(i for i, v in enumerate(self.vertices) if _dot(a, v) == c)
            if tight and tight != everything and self._dim(tight) == self.dim - 1:
                facets.add(tight)
        self.facets = sorted(facets, key=sorted)

        faces = set(facets)
        frontier = list(facets)
        while frontier:
            nxt = []
            for f in frontier:
                for g in self.facets:
                    h = f & g
                    if h and h not in faces:
                        faces.add(h)
                        nxt.append(h)
            frontier = nxt
        faces.add(everything)
        self.faces = faces

    def _dim(self, face: frozenset[int]) -> int:
        d = self._dims.get(face)
        if d is None:
            d = affine_rank([self.vertices[i] for i in sorted(face)])
            self._dims[face] = d
        return d

    def dimension(self, face: frozenset[int]) -> int:
        return self._dim(face)

    def points(self, face: frozenset[int]) -> set[tuple]:
        return {self.vertices[i] for i in face}

    def faces_of_dim(self, d: int) -> list[frozenset[int]]:
        return [f for f in self.faces if self._dim(f) == d]

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[self._dim(f)] += 1
        return tuple(counts)


def integral_vertices(vertices: Iterable[Sequence[Fraction]]) -> set[tuple[int, ...]]:
    out = set()
    for v in vertices:
        if any(Fraction(x).denominator != 1 for x in v):
            raise ArithmeticError(f"vertex {v} is not a lattice point")
        out.add(tuple(int(x) for x in v))
    return out
