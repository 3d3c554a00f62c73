"""Monomial gradings: weighted degrees, homogeneity, and the gradings making a derivation homogeneous."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .derivations import Derivation, euler_derivation
from .polynomial import MINUS_INFINITY, Polynomial


class NotHomogeneousError(ValueError):
    pass


def weight_vector(*weights) -> tuple[Fraction, ...]:
    if len(weights) == 1 and not isinstance(weights[0], (int, Fraction, str)):
        weights = tuple(weights[0])
    return tuple(Fraction(w) for w in weights)


def _monomial_weight(m, w) -> Fraction:
    return sum((Fraction(e) * wi for e, wi in zip(m, w)), Fraction(0))


def weighted_degree(p: Polynomial, w):
    if len(w) != p.ring.n:
        raise ValueError(f"weight vector has {len(w)} entries, ring has {p.ring.n} variables")
    if not p:
        return MINUS_INFINITY
    return max(_monomial_weight(m, w) for m, _ in p.items())


def is_homogeneous(p: Polynomial, w) -> bool:
    return len({_monomial_weight(m, w) for m, _ in p.items()}) <= 1


def derivation_degree(D: Derivation, w) -> Fraction:
    """The k with deg(D(X_i)) - w_i == k for every i where D(X_i) != 0."""
    w = weight_vector(w)
    ks = set()
    for i, image in enumerate(D.images):
        if not image:
            continue
        if not is_homogeneous(image, w):
            raise NotHomogeneousError(f"D({D.ring.names[i]}) = {image} is not homogeneous for {w}")
        ks.add(weighted_degree(image, w) - w[i])
    if not ks:
        raise NotHomogeneousError("the zero derivation has no well-defined degree")
    if len(ks) > 1:
        raise NotHomogeneousError(f"degree shifts disagree: {sorted(ks)}")
    return ks.pop()


@dataclass(frozen=True)
class GradingSolution:
    """Basis of the space of (weights, degree) pairs making D homogeneous."""

    derivation: Derivation
    basis: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def _vectors(self):
        return [linalg.dense_to_sparse(list(w) + [k]) for w, k in self.basis]

    def contains(self, w, k) -> bool:
        target = linalg.dense_to_sparse(list(weight_vector(w)) + [Fraction(k)])
        return linalg.in_span(self._vectors(), target, Fraction(1))

    def combination(self, coeffs) -> tuple[tuple[Fraction, ...], Fraction]:
        n = self.derivation.ring.n
        w = [Fraction(0)] * n
        k = Fraction(0)
        for c, (bw, bk) in zip(coeffs, self.basis):
            c = Fraction(c)
            w = [a + c * b for a, b in zip(w, bw)]
            k += c * bk
        return tuple(w), k


def grading_constraints(D: Derivation) -> list[dict]:
    """Linear rows in the unknowns (w_1..w_n, k), encoded as sparse dicts."""
    n = D.ring.n
    rows = []
    for i, image in enumerate(D.images):
        if not image:
            continue
        monos = [m for m, _ in image.sorted_terms()]
        first = monos[0]
        for m in monos[1:]:
            rows.append(linalg.dense_to_sparse([Fraction(a - b) for a, b in zip(m, first)] + [0]))
        row = [Fraction(e) for e in first] + [Fraction(-1)]
        row[i] -= 1
        rows.append(linalg.dense_to_sparse(row))
    return rows


def solve_gradings(D: Derivation) -> GradingSolution:
    """All monomial gradings for which D is homogeneous, with the matching degree.

    Each basis vector (w, k) is a row of the reduced row echelon form of the
    solution space, so the output is deterministic.
    """
    if D.is_zero():
        raise ValueError("every grading makes the zero derivation homogeneous")
    n = D.ring.n
    rows = grading_constraints(D)
    one = Fraction(1)
    # kernel of the constraint matrix: columns indexed by unknowns
    columns = [{} for _ in range(n + 1)]
    for r, row in enumerate(rows):
        for j, v in row.items():
            columns[j][r] = v
    null = linalg.kernel(columns, one)
    reduced = linalg.rref(null, one)
    basis = []
    for vec in reduced:
        dense = linalg.sparse_to_dense(vec, n + 1, Fraction(0))
        basis.append((tuple(Fraction(x) for x in dense[:n]), Fraction(dense[n])))
    return GradingSolution(D, tuple(basis))


__all__ = [
    "GradingSolution",
    "NotHomogeneousError",
    "derivation_degree",
    "euler_derivation",
    "is_homogeneous",
    "solve_gradings",
    "weight_vector",
    "weighted_degree",
]
