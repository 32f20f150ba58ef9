"""The equivariant diagonal ξ: RS₂⊗C → C⊗C, its contracting homotopy, and the
identities it satisfies.

High-level chain-valued wrappers around the raw kernel (``kernel.py``).  The
memoized table stores only untwisted standard-simplex entries ξ(e_n⊗Δ^k);
everything else is reached by equivariance (the signed swap) and naturality
(order-preserving relabeling for vertex-list simplices, iterated faces for
abstract cells).
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import kernel
from .bar import bar_boundary, bar_boundary_coefficients, twist_act
from .chains import (
    BarElement,
    BasisElement,
    Chain,
    Simplex,
    TensorPair,
    chain_of,
    standard_simplex,
    zero_chain,
)
from .rings import Coefficient, Ring, ZZ

RawEntries = dict  # {(left vertex tuple, right vertex tuple): int}


class DiagonalTable:
    """Memoized untwisted diagonal values ξ(e_n⊗Δ^k), keyed by (n, k).

    Entries are write-once and idempotent (identical canonical values), so
    concurrent fills are safe.  Serialization lives in ``documents``.
    """

    SCHEMA_VERSION = 1

    def __init__(self, entries: Optional[Dict[Tuple[int, int], RawEntries]] = None):
        self.entries: Dict[Tuple[int, int], RawEntries] = dict(entries or {})

    def raw(self, n: int, k: int) -> RawEntries:
        return kernel.xi_standard(n, k, self.entries)

    def known_keys(self) -> List[Tuple[int, int]]:
        return sorted(self.entries)

    def verify_entry(self, n: int, k: int) -> bool:
        """Chain-map compatibility of a stored entry (see chain_map_defect)."""
        return not chain_map_defect(n, k, self)


# ---------------------------------------------------------------------------
# The contracting cochain and homotopy
# ---------------------------------------------------------------------------


def phi(k: int, face: Simplex, ring: Ring = ZZ) -> Chain:
    """φ_k: cone a face of Δ^k onto the top vertex k.

    φ_k([i₀,…,i_t]) = (−1)^{t+1}[i₀,…,i_t,k] when i_t ≠ k, else 0.  Together
    with ι_k (vertex inclusion) and ε (augmentation) it satisfies
    ∂φ_k + φ_k∂ = 1 − ι_k∘ε on the chains of Δ^k.
    """
    v = face.vertices
    if any(not 0 <= x <= k for x in v):
        raise ValueError(f"face {face} does not live in the {k}-simplex")
    if any(v[i] >= v[i + 1] for i in range(len(v) - 1)):
        raise ValueError(f"face {face} must have strictly increasing vertices")
    if v[-1] == k:
        return zero_chain(ring, face.degree + 1)
    sign = 1 if len(v) % 2 == 0 else -1  # (−1)^{t+1}
    return Chain(ring, face.degree + 1, {Simplex(v + (k,)): sign})


def big_phi(k: int, c: Chain) -> Chain:
    """Φ = φ_k⊗1 + (ι_k∘ε)⊗φ_k on chains in C(Δ^k)⊗C(Δ^k); Φ∘Φ = 0.

    The second summand survives only on degree-0 left factors (ε kills
    positive degrees), so no Koszul sign remains there.
    """
    ring = c.ring
    acc: Dict[BasisElement, Coefficient] = {}
    for basis, coeff in c.terms.items():
        if not isinstance(basis, TensorPair) or not isinstance(basis.left, Simplex):
            raise ValueError(f"big_phi needs simplex tensor pairs, got {basis}")
        left, right = basis.left, basis.right
        coned = phi(k, left, ring)
        for new_left, sign in coned.terms.items():
            key = TensorPair(new_left, right)
            acc[key] = ring.add(acc.get(key, ring.zero), ring.mul(coeff, sign))
        if left.degree == 0:
            coned_r = phi(k, right, ring)
            for new_right, sign in coned_r.terms.items():
                key = TensorPair(Simplex((k,)), new_right)
                acc[key] = ring.add(acc.get(key, ring.zero), ring.mul(coeff, sign))
    return Chain(ring, c.degree + 1, acc)


# ---------------------------------------------------------------------------
# Chain-valued diagonals
# ---------------------------------------------------------------------------


def _entries_to_chain(entries: RawEntries, ring: Ring, degree: int) -> Chain:
    terms = {
        TensorPair(Simplex(a), Simplex(b)): coeff for (a, b), coeff in entries.items()
    }
    return Chain(ring, degree, terms)


def aw_diagonal(simplex: Simplex, ring: Ring = ZZ) -> Chain:
    """The front-face ⊗ back-face coproduct (the level-0 diagonal)."""
    return _entries_to_chain(kernel.aw(simplex.vertices), ring, simplex.degree)


def xi_standard(b: BarElement, k: int, table: DiagonalTable, ring: Ring = ZZ) -> Chain:
    """ξ(b⊗Δ^k) on the standard simplex; zero when the bar level exceeds k."""
    chain = _entries_to_chain(table.raw(b.level, k), ring, b.level + k)
    if b.twist:
        chain = twist_act(chain)
    return chain


def xi_simplex(b: BarElement, simplex: Simplex, table: DiagonalTable, ring: Ring = ZZ) -> Chain:
    """ξ(b⊗σ) for a vertex-list simplex (weakly increasing labels).

    The simplex with k+1 vertex slots is the image of Δ^k under the
    order-preserving map sending slot i to its label; the standard value is
    pushed forward by relabeling.  Repeated labels encode degeneracies.
    """
    v = simplex.vertices
    if any(v[i] > v[i + 1] for i in range(len(v) - 1)):
        raise ValueError(f"vertex list of {simplex} is not weakly increasing")
    entries = kernel.pushforward(table.raw(b.level, simplex.degree), v)
    chain = _entries_to_chain(entries, ring, b.level + simplex.degree)
    if b.twist:
        chain = twist_act(chain)
    return chain


def xi_space(b: BarElement, x: Chain, table: DiagonalTable) -> Chain:
    """Linear extension of ξ(b⊗−) over a chain of vertex-list simplices."""
    ring = x.ring
    acc = zero_chain(ring, x.degree + b.level)
    for basis, coeff in x.terms.items():
        if not isinstance(basis, Simplex):
            raise ValueError(f"xi_space needs simplex terms, got {basis}")
        acc = acc + xi_simplex(b, basis, table, ring).scale(coeff)
    return acc


def xi_cell(b: BarElement, space, n: int, idx: int, table: DiagonalTable, ring: Ring) -> Chain:
    """ξ(b⊗σ) for an abstract cell of any presentation-like object.

    ``space`` must provide ``iterated_face(n, idx, keep)`` and
    ``basis_cell(n, idx)``.  This is the colimit extension: each standard
    term [i₀..i_s]⊗[j₀..j_t] becomes (face of σ keeping i's)⊗(face keeping
    j's).  Works for delta-complexes, simplicial-set presentations, and the
    free simplicial abelian groups built on them.
    """
    acc: Dict[BasisElement, Coefficient] = {}
    for (a, bb), coeff in table.raw(b.level, n).items():
        da, ia = space.iterated_face(n, idx, a)
        db, ib = space.iterated_face(n, idx, bb)
        key = TensorPair(space.basis_cell(da, ia), space.basis_cell(db, ib))
        coerced = ring.coerce(coeff)
        acc[key] = ring.add(acc.get(key, ring.zero), coerced)
    chain = Chain(ring, b.level + n, acc)
    if b.twist:
        chain = twist_act(chain)
    return chain


def normalize_diagonal(c: Chain) -> Chain:
    """Project C(X)⊗C(X) → N(X)⊗N(X): drop terms with a degenerate factor."""
    terms = {
        basis: coeff
        for basis, coeff in c.terms.items()
        if not (basis.left.is_degenerate or basis.right.is_degenerate)
    }
    return Chain(c.ring, c.degree, terms)


# ---------------------------------------------------------------------------
# Identities (used by the verification suite and property tests)
# ---------------------------------------------------------------------------


def _raw_add(acc: RawEntries, other: RawEntries, scalar: int) -> None:
    for key, value in other.items():
        new = acc.get(key, 0) + scalar * value
        if new:
            acc[key] = new
        else:
            acc.pop(key, None)


def _raw_twist(entries: RawEntries) -> RawEntries:
    out: RawEntries = {}
    for (a, b), value in entries.items():
        sign = -1 if ((len(a) - 1) * (len(b) - 1)) % 2 else 1
        _raw_add(out, {(b, a): sign * value}, 1)
    return out


def _simplex_boundary(vertices: tuple) -> List[Tuple[tuple, int]]:
    return [
        (vertices[:i] + vertices[i + 1 :], 1 if i % 2 == 0 else -1)
        for i in range(len(vertices))
        if len(vertices) > 1
    ]


def _tensor_boundary(entries: RawEntries) -> RawEntries:
    out: RawEntries = {}
    for (a, b), value in entries.items():
        for face, sign in _simplex_boundary(a):
            _raw_add(out, {(face, b): sign * value}, 1)
        left_sign = -1 if (len(a) - 1) % 2 else 1
        for face, sign in _simplex_boundary(b):
            _raw_add(out, {(a, face): left_sign * sign * value}, 1)
    return out


def chain_map_defect(n: int, k: int, table: DiagonalTable) -> RawEntries:
    """∂ξ(e_n⊗Δ^k) − ξ(∂e_n⊗Δ^k) − (−1)ⁿ ξ(e_n⊗∂Δ^k); empty iff satisfied."""
    simplex = tuple(range(k + 1))
    lhs = _tensor_boundary(table.raw(n, k))
    rhs: RawEntries = {}
    if n > 0:
        plain, twisted = bar_boundary_coefficients(n)
        lower = kernel.pushforward(table.raw(n - 1, k), simplex)
        _raw_add(rhs, lower, plain)
        _raw_add(rhs, _raw_twist(lower), twisted)
    face_sign = -1 if n % 2 else 1
    for face, sign in _simplex_boundary(simplex):
        _raw_add(rhs, kernel.pushforward(table.raw(n, len(face) - 1), face), face_sign * sign)
    defect = dict(lhs)
    _raw_add(defect, rhs, -1)
    return defect


def equivariance_defect(n: int, k: int, table: DiagonalTable) -> RawEntries:
    """Chain-map defect on the twisted generator T·e_n.

    The twisted value is defined by the signed swap, ξ(T·e_n⊗x) = T·ξ(e_n⊗x);
    this checks it still satisfies the chain-map identity with the twisted
    bar differential ∂(T·e_n) = T·∂e_n:

        ∂(T·ξ(e_n⊗Δ^k)) = ξ(∂(T·e_n)⊗Δ^k) + (−1)ⁿ ξ(T·e_n⊗∂Δ^k).

    Empty iff satisfied.
    """
    simplex = tuple(range(k + 1))
    lhs = _tensor_boundary(_raw_twist(table.raw(n, k)))
    rhs: RawEntries = {}
    if n > 0:
        plain, twisted = bar_boundary_coefficients(n)
        lower = kernel.pushforward(table.raw(n - 1, k), simplex)
        # ∂(T·e_n) = plain·T·e_{n−1} + twisted·e_{n−1}
        _raw_add(rhs, _raw_twist(lower), plain)
        _raw_add(rhs, lower, twisted)
    face_sign = -1 if n % 2 else 1
    for face, sign in _simplex_boundary(simplex):
        twisted_face = _raw_twist(kernel.pushforward(table.raw(n, len(face) - 1), face))
        _raw_add(rhs, twisted_face, face_sign * sign)
    defect = dict(lhs)
    _raw_add(defect, rhs, -1)
    return defect


def _raw_big_phi(entries: RawEntries, k: int) -> RawEntries:
    out: RawEntries = {}
    for (a, b), value in entries.items():
        if a[-1] != k:
            sign = 1 if len(a) % 2 == 0 else -1
            _raw_add(out, {(a + (k,), b): sign * value}, 1)
        if len(a) == 1 and b[-1] != k:
            sign = 1 if len(b) % 2 == 0 else -1
            _raw_add(out, {((k,), b + (k,)): sign * value}, 1)
    return out


def reference_xi(n: int, vertices: Tuple[int, ...]) -> RawEntries:
    """Independent evaluation of ξ(e_n⊗σ) running the recursion natively on an
    arbitrary strictly increasing vertex set (coning onto its own top vertex)
    instead of relabeling a standard-simplex value.  Used to verify
    naturality: this must agree with the pushforward route for every
    order-preserving injection.  Deliberately unmemoized and slow.
    """
    k = len(vertices) - 1
    if n > k:
        return {}
    top = vertices[-1]

    def local_big_phi(entries: RawEntries) -> RawEntries:
        out: RawEntries = {}
        for (a, b), value in entries.items():
            if a[-1] != top:
                sign = 1 if len(a) % 2 == 0 else -1
                _raw_add(out, {(a + (top,), b): sign * value}, 1)
            if len(a) == 1 and b[-1] != top:
                sign = 1 if len(b) % 2 == 0 else -1
                _raw_add(out, {((top,), b + (top,)): sign * value}, 1)
        return out

    if n == 0:
        return kernel.aw(vertices)
    plain, twisted = bar_boundary_coefficients(n)
    lower = reference_xi(n - 1, vertices)
    bar_part: RawEntries = {}
    _raw_add(bar_part, lower, plain)
    _raw_add(bar_part, _raw_twist(lower), twisted)
    result = local_big_phi(bar_part)
    face_part: RawEntries = {}
    for face, sign in _simplex_boundary(vertices):
        _raw_add(face_part, reference_xi(n, face), sign)
    _raw_add(result, local_big_phi(face_part), -1 if n % 2 else 1)
    return result


def naturality_defect(n: int, injection: Sequence[int], table: DiagonalTable) -> RawEntries:
    """Pushforward of the standard value along an order-preserving injection
    versus the recursion run natively on the image vertex set; empty iff the
    construction is natural along that injection."""
    injection = tuple(injection)
    if any(injection[i] >= injection[i + 1] for i in range(len(injection) - 1)):
        raise ValueError("need a strictly increasing injection")
    pushed = kernel.pushforward(table.raw(n, len(injection) - 1), injection)
    direct = reference_xi(n, injection)
    defect = dict(pushed)
    _raw_add(defect, direct, -1)
    return defect


def top_diagonal_sign(k: int, table: DiagonalTable) -> Optional[int]:
    """The coefficient η with ξ(e_k⊗Δ^k) = η·Δ^k⊗Δ^k, or None if not of that form."""
    entries = table.raw(k, k)
    top = (tuple(range(k + 1)), tuple(range(k + 1)))
    if set(entries) != {top}:
        return None
    return entries[top]


def check_prime3(k: int, table: DiagonalTable) -> bool:
    """The arity-3 boundary identity tying the level-1 diagonal to the cyclic
    rotation: on every basis simplex σ of Δ^k,

        ∂{(1⊗Δ)Δ₂}(σ) + {(1⊗Δ)Δ₂}(∂σ) = {(1,2,3) − 1}(1⊗Δ)Δ(σ),

    where Δ = ξ(e₀⊗−), Δ₂ = ξ(e₁⊗−), and (1,2,3) is the Koszul-signed cyclic
    rotation a⊗b⊗c ↦ (−1)^{|c|(|a|+|b|)} c⊗a⊗b.
    """
    from itertools import combinations

    def diag0(vertices: tuple) -> RawEntries:
        return kernel.aw(vertices)

    def diag1(vertices: tuple) -> RawEntries:
        return kernel.xi_on_vertices(1, vertices, table.entries)

    def one_x_diag(entries: RawEntries) -> dict:
        out: dict = {}
        for (a, b), value in entries.items():
            for (x, y), w in diag0(b).items():
                key = (a, x, y)
                new = out.get(key, 0) + value * w
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return out

    def triple_boundary(entries: dict) -> dict:
        out: dict = {}
        for (a, b, c), value in entries.items():
            shift = 0
            for pos, part in enumerate((a, b, c)):
                sign_shift = -1 if shift % 2 else 1
                for face, sign in _simplex_boundary(part):
                    key = tuple(face if i == pos else (a, b, c)[i] for i in range(3))
                    new = out.get(key, 0) + sign_shift * sign * value
                    if new:
                        out[key] = new
                    else:
                        out.pop(key, None)
                shift += len(part) - 1
        return out

    def rotate(entries: dict) -> dict:
        out: dict = {}
        for (a, b, c), value in entries.items():
            sign = -1 if ((len(c) - 1) * (len(a) + len(b) - 2)) % 2 else 1
            key = (c, a, b)
            new = out.get(key, 0) + sign * value
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return out

    def add3(acc: dict, other: dict, scalar: int) -> None:
        for key, value in other.items():
            new = acc.get(key, 0) + scalar * value
            if new:
                acc[key] = new
            else:
                acc.pop(key, None)

    for d in range(k + 1):
        for verts in combinations(range(k + 1), d + 1):
            lhs = triple_boundary(one_x_diag(diag1(verts)))
            for face, sign in _simplex_boundary(verts):
                add3(lhs, one_x_diag(diag1(face)), sign)
            base = one_x_diag(diag0(verts))
            rhs = rotate(base)
            add3(rhs, base, -1)
            add3(lhs, rhs, -1)
            if lhs:
                return False
    return True
