"""Graded chains over an exact ring, chain complexes, and graded maps.

Basis elements come in a handful of shapes (simplices with explicit vertex
lists, abstract cells of a presentation, tensor pairs, bar generators, and
bar⊗simplex pairs).  All carry a degree and a canonical sort key so that
chains normalize to a unique form and equality is structural.

Sign conventions (used consistently everywhere):

* tensor boundary      ∂(a⊗b) = ∂a⊗b + (−1)^{|a|} a⊗∂b
* map on tensors       (f⊗g)(a⊗b) = (−1)^{deg(g)·deg(a)} f(a)⊗g(b)
* hom differential     ∂f = f∘∂ − (−1)^{deg f} ∂∘f
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Tuple

from .rings import Coefficient, Ring

# ---------------------------------------------------------------------------
# Basis elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Simplex:
    """A simplex given by an ordered vertex list; repeats encode degeneracy.

    ``D_i [0..n] = [0,..,i,i,..,n]`` is the i-th degeneracy, so a simplex is
    degenerate exactly when two adjacent vertices coincide.
    """

    vertices: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a simplex needs at least one vertex")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def degree(self) -> int:
        return len(self.vertices) - 1

    dimension = degree

    @property
    def is_degenerate(self) -> bool:
        v = self.vertices
        return any(v[i] == v[i + 1] for i in range(len(v) - 1))

    def face(self, i: int) -> "Simplex":
        if not 0 <= i <= self.degree:
            raise IndexError(f"face index {i} out of range for {self}")
        return Simplex(self.vertices[:i] + self.vertices[i + 1 :])

    def degeneracy(self, i: int) -> "Simplex":
        if not 0 <= i <= self.degree:
            raise IndexError(f"degeneracy index {i} out of range for {self}")
        v = self.vertices
        return Simplex(v[: i + 1] + (v[i],) + v[i + 1 :])

    def sort_key(self):
        return (0, self.vertices)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.vertices) + "]"


def standard_simplex(k: int) -> Simplex:
    return Simplex(tuple(range(k + 1)))


@dataclass(frozen=True)
class Cell:
    """An abstract cell of a finite presentation: a dimension and a label."""

    dim: int
    label: object

    @property
    def degree(self) -> int:
        return self.dim

    def sort_key(self):
        return (1, self.dim, _label_key(self.label))

    def __str__(self) -> str:
        return f"<{self.dim}:{self.label}>"


def _label_key(label):
    # Totally order heterogeneous labels by (type name, value) recursively.
    if isinstance(label, tuple):
        return ("tuple", tuple(_label_key(x) for x in label))
    return (type(label).__name__, label)


@dataclass(frozen=True)
class TensorPair:
    left: "BasisElement"
    right: "BasisElement"

    @property
    def degree(self) -> int:
        return self.left.degree + self.right.degree

    def sort_key(self):
        return (2, self.left.sort_key(), self.right.sort_key())

    def __str__(self) -> str:
        return f"{self.left}⊗{self.right}"


@dataclass(frozen=True)
class BarElement:
    """A basis element g·e_n of the normalized bar resolution of S₂.

    ``twist`` is False for the identity coefficient and True for T = (1,2);
    the degree is the bar level n.
    """

    twist: bool
    level: int

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError("bar level must be nonnegative")

    @property
    def degree(self) -> int:
        return self.level

    def twisted(self) -> "BarElement":
        return BarElement(not self.twist, self.level)

    def sort_key(self):
        return (3, self.level, self.twist)

    def __str__(self) -> str:
        return ("T·" if self.twist else "") + f"e{self.level}"


def e(n: int) -> BarElement:
    """The untwisted bar generator e_n."""
    return BarElement(False, n)


@dataclass(frozen=True)
class BarSimplexPair:
    bar: BarElement
    simplex: Simplex

    @property
    def degree(self) -> int:
        return self.bar.degree + self.simplex.degree

    def sort_key(self):
        return (4, self.bar.sort_key(), self.simplex.sort_key())

    def __str__(self) -> str:
        return f"{self.bar}⊗{self.simplex}"


BasisElement = object  # union of the dataclasses above; duck-typed via .degree


# ---------------------------------------------------------------------------
# Chains
# ---------------------------------------------------------------------------


class Chain:
    """A finite formal sum of basis elements of a common degree.

    Immutable after construction; zero coefficients are dropped and terms are
    kept in a dict (rendered in canonical order), so ``==`` is structural
    equality of normalized values.
    """

    __slots__ = ("ring", "degree", "terms")

    def __init__(self, ring: Ring, degree: int, terms: Mapping[BasisElement, Coefficient] = ()):
        clean: Dict[BasisElement, Coefficient] = {}
        for basis, coeff in dict(terms).items():
            coeff = ring.coerce(coeff)
            if ring.is_zero(coeff):
                continue
            if basis.degree != degree:
                raise ValueError(f"term {basis} has degree {basis.degree}, chain has degree {degree}")
            clean[basis] = coeff
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Chain is immutable")

    # --- algebra ----------------------------------------------------------
    def __add__(self, other: "Chain") -> "Chain":
        self._check_compatible(other)
        terms = dict(self.terms)
        for basis, coeff in other.terms.items():
            terms[basis] = self.ring.add(terms.get(basis, self.ring.zero), coeff)
        return Chain(self.ring, self.degree, terms)

    def __neg__(self) -> "Chain":
        return Chain(self.ring, self.degree, {b: self.ring.neg(c) for b, c in self.terms.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scale(self, scalar: Coefficient) -> "Chain":
        scalar = self.ring.coerce(scalar)
        return Chain(self.ring, self.degree, {b: self.ring.mul(scalar, c) for b, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Chain)
            and self.ring == other.ring
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.degree, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[BasisElement, Coefficient]]:
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()))

    def coefficient(self, basis: BasisElement) -> Coefficient:
        return self.terms.get(basis, self.ring.zero)

    def map_terms(self, fn: Callable[[BasisElement, Coefficient], Iterable[Tuple[BasisElement, Coefficient]]],
                  degree: int) -> "Chain":
        """Linear extension of a term-level map producing a degree-``degree`` chain."""
        acc: Dict[BasisElement, Coefficient] = {}
        for basis, coeff in self.terms.items():
            for new_basis, new_coeff in fn(basis, coeff):
                acc[new_basis] = self.ring.add(acc.get(new_basis, self.ring.zero), self.ring.coerce(new_coeff))
        return Chain(self.ring, degree, acc)

    def _check_compatible(self, other: "Chain") -> None:
        if self.ring != other.ring or self.degree != other.degree:
            raise ValueError("chains live in different rings or degrees")

    def __repr__(self) -> str:
        return f"Chain({self.ring}, {self.degree}, {render_chain(self)!r})"

    def __str__(self) -> str:
        return render_chain(self)


def chain_of(ring: Ring, basis: BasisElement, coeff: Coefficient = 1) -> Chain:
    return Chain(ring, basis.degree, {basis: coeff})


def zero_chain(ring: Ring, degree: int) -> Chain:
    return Chain(ring, degree, {})


def render_coefficient(coeff: Coefficient) -> str:
    return str(coeff)


def render_chain(chain: Chain) -> str:
    """Canonical text form: terms in canonical order, ±1 rendered as signs."""
    if chain.is_zero():
        return "0"
    parts: List[str] = []
    for basis, coeff in chain:
        if coeff == 1:
            text, sign = str(basis), "+"
        elif coeff == -1:
            text, sign = str(basis), "-"
        else:
            sign = "-" if (not isinstance(coeff, bool) and coeff < 0) else "+"
            mag = -coeff if coeff < 0 else coeff
            text = f"{render_coefficient(mag)}·{basis}"
        if not parts:
            parts.append(text if sign == "+" else f"-{text}")
        else:
            parts.append(f"{sign} {text}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Chain complexes
# ---------------------------------------------------------------------------


class ChainComplex:
    """A nonnegatively graded free complex with explicit basis per degree."""

    def __init__(
        self,
        ring: Ring,
        basis: Mapping[int, List[BasisElement]],
        boundary: Mapping[BasisElement, Chain],
        truncation_dim: int,
        exhaustive: bool = False,
    ):
        # exhaustive: absent degrees are genuinely zero (the complex is not a
        # truncation of something larger), so homology is valid at every degree
        self.exhaustive = exhaustive
        self.ring = ring
        self.basis: Dict[int, List[BasisElement]] = {
            n: list(elems) for n, elems in basis.items() if elems
        }
        self.boundary_table: Dict[BasisElement, Chain] = dict(boundary)
        self.truncation_dim = truncation_dim
        self._index: Dict[BasisElement, int] = {}
        for n, elems in self.basis.items():
            for i, b in enumerate(elems):
                if b.degree != n:
                    raise ValueError(f"basis element {b} listed in degree {n}")
                self._index[b] = i

    def degrees(self) -> List[int]:
        return sorted(self.basis)

    def rank(self, n: int) -> int:
        return len(self.basis.get(n, []))

    def basis_in(self, n: int) -> List[BasisElement]:
        return self.basis.get(n, [])

    def index_of(self, basis: BasisElement) -> int:
        return self._index[basis]

    def boundary_of_basis(self, basis: BasisElement) -> Chain:
        ch = self.boundary_table.get(basis)
        if ch is None:
            return zero_chain(self.ring, basis.degree - 1)
        return ch

    def boundary(self, chain: Chain) -> Chain:
        acc = zero_chain(self.ring, chain.degree - 1)
        for basis, coeff in chain.terms.items():
            acc = acc + self.boundary_of_basis(basis).scale(coeff)
        return acc

    def boundary_matrix(self, n: int) -> List[Dict[int, Coefficient]]:
        """Columns of ∂_n: C_n → C_{n−1}, one sparse column per basis element."""
        lower = {b: i for i, b in enumerate(self.basis_in(n - 1))}
        cols: List[Dict[int, Coefficient]] = []
        for b in self.basis_in(n):
            col: Dict[int, Coefficient] = {}
            for face, coeff in self.boundary_of_basis(b).terms.items():
                col[lower[face]] = coeff
            cols.append(col)
        return cols

    def check_dd_zero(self) -> bool:
        for n in self.degrees():
            if n < 2:
                continue
            for b in self.basis_in(n):
                if not self.boundary(self.boundary_of_basis(b)).is_zero():
                    return False
        return True


def tensor_complex(a: ChainComplex, b: ChainComplex, truncation_dim: int | None = None) -> ChainComplex:
    if a.ring != b.ring:
        raise ValueError("tensor factors must share a ring")
    ring = a.ring
    if truncation_dim is None:
        truncation_dim = a.truncation_dim + b.truncation_dim
    basis: Dict[int, List[BasisElement]] = {}
    boundary: Dict[BasisElement, Chain] = {}
    for p in a.degrees():
        for q in b.degrees():
            n = p + q
            if n > truncation_dim:
                continue
            for x in a.basis_in(p):
                for y in b.basis_in(q):
                    pair = TensorPair(x, y)
                    basis.setdefault(n, []).append(pair)
                    terms: Dict[BasisElement, Coefficient] = {}
                    for fx, cx in a.boundary_of_basis(x).terms.items():
                        key = TensorPair(fx, y)
                        terms[key] = ring.add(terms.get(key, ring.zero), cx)
                    sign = ring.coerce(-1 if p % 2 else 1)
                    for fy, cy in b.boundary_of_basis(y).terms.items():
                        key = TensorPair(x, fy)
                        terms[key] = ring.add(terms.get(key, ring.zero), ring.mul(sign, cy))
                    boundary[pair] = Chain(ring, n - 1, terms)
    return ChainComplex(ring, basis, boundary, truncation_dim)


# ---------------------------------------------------------------------------
# Graded maps and the Hom differential
# ---------------------------------------------------------------------------


class GradedMap:
    """A degree-homogeneous linear map between complexes, given on basis."""

    def __init__(
        self,
        source: ChainComplex,
        target: ChainComplex,
        degree: int,
        action: Callable[[BasisElement], Chain] | Mapping[BasisElement, Chain],
    ):
        self.source = source
        self.target = target
        self.degree = degree
        if callable(action):
            self._action = action
        else:
            table = dict(action)
            self._action = lambda basis: table.get(basis, zero_chain(target.ring, basis.degree + degree))

    def on_basis(self, basis: BasisElement) -> Chain:
        out = self._action(basis)
        if out.degree != basis.degree + self.degree:
            raise ValueError(
                f"map of degree {self.degree} sent degree {basis.degree} to degree {out.degree}"
            )
        return out

    def __call__(self, chain: Chain) -> Chain:
        acc = zero_chain(self.target.ring, chain.degree + self.degree)
        for basis, coeff in chain.terms.items():
            acc = acc + self.on_basis(basis).scale(coeff)
        return acc

    def is_zero_on(self, degrees: Iterable[int]) -> bool:
        return all(
            self.on_basis(b).is_zero() for n in degrees for b in self.source.basis_in(n)
        )


def identity_map(c: ChainComplex) -> GradedMap:
    return GradedMap(c, c, 0, lambda basis: chain_of(c.ring, basis))


def hom_differential(f: GradedMap) -> GradedMap:
    """∂f = f∘∂ − (−1)^{deg f} ∂∘f; vanishes exactly on chain maps in degree 0."""
    sign = -1 if f.degree % 2 else 1

    def action(basis: BasisElement) -> Chain:
        first = f(f.source.boundary_of_basis(basis))
        second = f.target.boundary(f.on_basis(basis))
        return first - second.scale(sign)

    return GradedMap(f.source, f.target, f.degree - 1, action)


def tensor_map_apply(f: GradedMap, g: GradedMap, x: Chain) -> Chain:
    """Apply f⊗g to a chain of tensor pairs with the Koszul sign.

    (f⊗g)(a⊗b) = (−1)^{deg(g)·deg(a)} f(a)⊗g(b).
    """
    ring = x.ring
    out_degree = x.degree + f.degree + g.degree
    acc: Dict[BasisElement, Coefficient] = {}
    for basis, coeff in x.terms.items():
        if not isinstance(basis, TensorPair):
            raise ValueError(f"tensor_map_apply needs tensor-pair terms, got {basis}")
        sign = -1 if (g.degree * basis.left.degree) % 2 else 1
        fa = f.on_basis(basis.left)
        gb = g.on_basis(basis.right)
        for left, cl in fa.terms.items():
            for right, cr in gb.terms.items():
                key = TensorPair(left, right)
                contrib = ring.mul(ring.mul(coeff, ring.coerce(sign)), ring.mul(cl, cr))
                acc[key] = ring.add(acc.get(key, ring.zero), contrib)
    return Chain(ring, out_degree, acc)
