"""The injectivity witness: truncated diagonal vectors and their independence.

For a chain c the truncated diagonal vector is e(c) = (1, c, c⊗c, …,
c^{⊗(t−1)}).  Projecting each tensor power to the symmetric algebra on the
chain basis (sort the tensor factors, multiply as commuting monomials) turns
e(c) into a vector of polynomial values, and for distinct nonzero chains
c₁,…,c_t the vectors e(c₁),…,e(c_t) are linearly independent over the
fraction field — the evaluation matrix is Vandermonde-structured, with
determinant Π_{i<j}(f(c_i) − f(c_j)).  ``vandermonde_independence`` verifies
the independence by exact rank computation; ``vandermonde_det_factorization``
verifies the determinant identity symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Tuple

from .chains import BasisElement, Chain
from .linalg import rref_field
from .rings import Coefficient, QQ, Ring

Monomial = Tuple[BasisElement, ...]  # sorted tuple of basis elements
Polynomial = Dict[Monomial, Coefficient]  # in the symmetric algebra on the basis


def _sorted_monomial(factors: Monomial) -> Monomial:
    return tuple(sorted(factors, key=lambda b: b.sort_key()))


def symmetrized_power(c: Chain, power: int, field: Ring) -> Polynomial:
    """The image of c^{⊗power} in the symmetric algebra on the chain basis."""
    acc: Polynomial = {(): field.one}
    for _ in range(power):
        nxt: Polynomial = {}
        for mono, coeff in acc.items():
            for basis, value in c.terms.items():
                key = _sorted_monomial(mono + (basis,))
                v = field.add(nxt.get(key, field.zero), field.mul(coeff, field.coerce(value)))
                if field.is_zero(v):
                    nxt.pop(key, None)
                else:
                    nxt[key] = v
        acc = nxt
    return acc


@dataclass
class TruncatedDiagonalVector:
    """e(c) = (1, c, c⊗c, …, c^{⊗(t−1)}), with tensor powers symmetrized."""

    components: List[Polynomial]
    t: int

    @staticmethod
    def of(c: Chain, t: int, field: Ring) -> "TruncatedDiagonalVector":
        return TruncatedDiagonalVector([symmetrized_power(c, j, field) for j in range(t)], t)

    def check_powers(self, field: Ring) -> bool:
        """Component i must be the i-fold product of component 1."""
        acc: Polynomial = {(): field.one}
        base = self.components[1] if self.t > 1 else {}
        for i, comp in enumerate(self.components):
            if comp != acc:
                return False
            nxt: Polynomial = {}
            for mono, coeff in acc.items():
                for extra, value in base.items():
                    key = _sorted_monomial(mono + extra)
                    v = field.add(nxt.get(key, field.zero), field.mul(coeff, value))
                    if field.is_zero(v):
                        nxt.pop(key, None)
                    else:
                        nxt[key] = v
            acc = nxt
        return True


def _fraction_field(ring: Ring) -> Ring:
    return QQ if not ring.is_field else ring


def vandermonde_independence(cs: List[Chain], ring: Ring) -> bool:
    """Whether e(c₁),…,e(c_t) are linearly independent over the fraction field.

    Preconditions (violations raise, they are never reported as ``False``):
    the chains are pairwise distinct, nonzero, and homogeneous of a common
    degree; t ≥ 1.
    """
    t = len(cs)
    if t < 1:
        raise ValueError("need at least one chain")
    degree = cs[0].degree
    for c in cs:
        if c.is_zero():
            raise ValueError("chains must be nonzero")
        if c.degree != degree:
            raise ValueError("chains must share a degree")
        if c.ring != ring:
            raise ValueError("chain ring differs from the requested ring")
    for i in range(t):
        for j in range(i + 1, t):
            if cs[i] == cs[j]:
                raise ValueError("chains must be pairwise distinct")
    field = _fraction_field(ring)
    vectors = [TruncatedDiagonalVector.of(c, t, field) for c in cs]
    # common coordinate space: (power, monomial) pairs
    columns: Dict[Tuple[int, Monomial], int] = {}
    for vec in vectors:
        for power, comp in enumerate(vec.components):
            for mono in comp:
                columns.setdefault((power, mono), len(columns))
    rows = []
    for vec in vectors:
        row = [field.zero] * len(columns)
        for power, comp in enumerate(vec.components):
            for mono, coeff in comp.items():
                row[columns[(power, mono)]] = coeff
        rows.append(row)
    reduced, _ = rref_field(rows, len(columns), field)
    return len(reduced) == t


# ---------------------------------------------------------------------------
# Symbolic determinant factorization (exact multivariate polynomials over ℤ)
# ---------------------------------------------------------------------------

IntPoly = Dict[Tuple[int, ...], int]  # exponent vector in x_1..x_t → coefficient


def _poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    out: IntPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _poly_add(a: IntPoly, b: IntPoly, scalar: int = 1) -> IntPoly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scalar * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def vandermonde_det_factorization(t: int) -> bool:
    """det [x_i^j]_{1≤i≤t, 0≤j<t} = Π_{i<j} (x_j − x_i), verified symbolically
    by expanding both sides as exact integer polynomials."""

    def variable(i: int) -> IntPoly:
        e = [0] * t
        e[i] = 1
        return {tuple(e): 1}

    def power(p: IntPoly, n: int) -> IntPoly:
        out: IntPoly = {tuple([0] * t): 1}
        for _ in range(n):
            out = _poly_mul(out, p)
        return out

    # determinant by Leibniz expansion (t is small: the witness runs at t = 3)
    det: IntPoly = {}
    for perm in permutations(range(t)):
        sign = 1
        seen = [False] * t
        for start in range(t):
            if seen[start]:
                continue
            length = 0
            cur = start
            while not seen[cur]:
                seen[cur] = True
                cur = perm[cur]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term: IntPoly = {tuple([0] * t): sign}
        for i in range(t):
            term = _poly_mul(term, power(variable(i), perm[i]))
        det = _poly_add(det, term)
    product: IntPoly = {tuple([0] * t): 1}
    for i in range(t):
        for j in range(i + 1, t):
            product = _poly_mul(product, _poly_add(variable(j), variable(i), -1))
    return det == product
