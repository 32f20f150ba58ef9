"""Truncated Dold-Kan machinery.

Simplicial abelian groups are presented by an ordered basis per level with
face and degeneracy operators as sparse integer (or field) matrices.  The
module provides:

* the Moore complex (full levels, alternating-sum boundary) and the
  normalized complex N (degreewise ⋂ ker d_i, boundary (−1)ⁿ d_n),
* the inverse functor Γ building a simplicial abelian group from a chain
  complex by formal degeneracies,
* free (pointed) simplicial abelian groups ℛX and R̃X on a presented
  simplicial set, with R̃X = ℛX / (basepoint degeneracy chain),
* the Hurewicz map x ↦ 1·x on normalized and unnormalized chains, the
  retraction γ, and the diagonal-compatibility defect of the Hurewicz square.

Everything is finite because the inputs are truncated; every linear-algebra
step is exact (Smith form over ℤ, elimination over fields).
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .bar import BarElement
from .chains import Cell, Chain, ChainComplex, GradedMap, TensorPair, chain_of, zero_chain
from .diagonal import DiagonalTable, xi_cell
from .linalg import SpanSolver, field_kernel, integer_kernel, integer_solve
from .rings import Coefficient, Ring
from .simplicial import (
    SimplicialSetPresentation,
    all_surjection_words,
    compose_degeneracy,
    compose_face,
)

Columns = List[Dict[int, Coefficient]]  # sparse columns of a linear map


def _compose(second: Columns, first: Columns, ring: Ring) -> Columns:
    """Columns of (second ∘ first)."""
    out: Columns = []
    for col in first:
        acc: Dict[int, Coefficient] = {}
        for mid, c1 in col.items():
            for row, c2 in second[mid].items():
                v = ring.add(acc.get(row, ring.zero), ring.mul(c1, c2))
                if ring.is_zero(v):
                    acc.pop(row, None)
                else:
                    acc[row] = v
        out.append(acc)
    return out


def _identity_columns(rank: int, ring: Ring) -> Columns:
    return [{i: ring.one} for i in range(rank)]


def _columns_equal(a: Columns, b: Columns) -> bool:
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))


def _apply_columns(cols: Columns, vec: Sequence[Coefficient], ring: Ring, nrows: int) -> List[Coefficient]:
    out = [ring.zero] * nrows
    for j, x in enumerate(vec):
        if ring.is_zero(x):
            continue
        for row, c in cols[j].items():
            out[row] = ring.add(out[row], ring.mul(x, c))
    return out


class SimplicialAbelianGroup:
    """A truncated simplicial object in free modules over an exact ring.

    ``levels[n]`` is the ordered basis of level n (arbitrary hashable labels);
    ``face_maps[(n, i)]`` the sparse columns of d_i: level n → level n−1, and
    ``degeneracy_maps[(n, i)]`` those of s_i: level n → level n+1 (present
    whenever n+1 ≤ truncation_dim).  All simplicial identities are checked as
    matrix identities up to the truncation.
    """

    def __init__(
        self,
        ring: Ring,
        levels: Dict[int, List[object]],
        face_maps: Dict[Tuple[int, int], Columns],
        degeneracy_maps: Dict[Tuple[int, int], Columns],
        truncation_dim: int,
        name: str = "",
        validate: bool = True,
    ):
        self.ring = ring
        self.levels: Dict[int, List[object]] = {n: list(v) for n, v in levels.items() if v}
        self.face_maps = {k: [dict(c) for c in v] for k, v in face_maps.items()}
        self.degeneracy_maps = {k: [dict(c) for c in v] for k, v in degeneracy_maps.items()}
        self.truncation_dim = truncation_dim
        self.name = name
        if validate:
            self.validate()

    def rank(self, n: int) -> int:
        return len(self.levels.get(n, []))

    def face(self, n: int, i: int) -> Columns:
        return self.face_maps.get((n, i), [{} for _ in range(self.rank(n))])

    def degeneracy(self, n: int, i: int) -> Columns:
        return self.degeneracy_maps.get((n, i), [{} for _ in range(self.rank(n))])

    def basis_cell(self, n: int, idx: int) -> Cell:
        return Cell(n, self.levels[n][idx])

    def validate(self) -> None:
        ring = self.ring
        for n in sorted(self.levels):
            # d_i d_j = d_{j−1} d_i, i < j
            if n >= 2 and self.rank(n - 1):
                for j in range(n + 1):
                    for i in range(j):
                        lhs = _compose(self.face(n - 1, i), self.face(n, j), ring)
                        rhs = _compose(self.face(n - 1, j - 1), self.face(n, i), ring)
                        if not _columns_equal(lhs, rhs):
                            raise ValueError(f"identity d_{i} d_{j} failed at level {n} of {self.name!r}")
            # s_i s_j = s_{j+1} s_i, i ≤ j
            if n + 2 <= self.truncation_dim:
                for j in range(n + 1):
                    for i in range(j + 1):
                        lhs = _compose(self.degeneracy(n + 1, i), self.degeneracy(n, j), ring)
                        rhs = _compose(self.degeneracy(n + 1, j + 1), self.degeneracy(n, i), ring)
                        if not _columns_equal(lhs, rhs):
                            raise ValueError(f"identity s_{i} s_{j} failed at level {n} of {self.name!r}")
            # d_i s_j mixed identities
            if n + 1 <= self.truncation_dim:
                for j in range(n + 1):
                    s = self.degeneracy(n, j)
                    for i in range(n + 2):
                        got = _compose(self.face(n + 1, i), s, ring)
                        if i in (j, j + 1):
                            want = _identity_columns(self.rank(n), ring)
                        elif i < j:
                            want = _compose(self.degeneracy(n - 1, j - 1), self.face(n, i), ring)
                        else:
                            want = _compose(self.degeneracy(n - 1, j), self.face(n, i - 1), ring)
                        if not _columns_equal(got, want):
                            raise ValueError(f"identity d_{i} s_{j} failed at level {n} of {self.name!r}")


# ---------------------------------------------------------------------------
# Moore and normalized complexes
# ---------------------------------------------------------------------------


def moore_complex(a: SimplicialAbelianGroup) -> ChainComplex:
    """Degree-n module = level n, boundary = Σ (−1)^i d_i."""
    ring = a.ring
    basis: Dict[int, List[Cell]] = {n: [a.basis_cell(n, i) for i in range(a.rank(n))] for n in sorted(a.levels)}
    boundary: Dict[Cell, Chain] = {}
    for n in sorted(a.levels):
        lower = basis.get(n - 1, [])
        for idx, b in enumerate(basis[n]):
            terms: Dict[Cell, Coefficient] = {}
            if n > 0 and lower:
                for i in range(n + 1):
                    for row, c in a.face(n, i)[idx].items():
                        sign = ring.coerce(-1 if i % 2 else 1)
                        v = ring.add(terms.get(lower[row], ring.zero), ring.mul(sign, c))
                        terms[lower[row]] = v
            boundary[b] = Chain(ring, n - 1, terms)
    return ChainComplex(ring, basis, boundary, a.truncation_dim)


def _kernel_basis(rows: List[List[Coefficient]], ncols: int, ring: Ring) -> List[List[Coefficient]]:
    if ring.is_field:
        return field_kernel(rows, ncols, ring)
    return integer_kernel(rows, ncols)


class _Expresser:
    """Expresses vectors in the span of a fixed basis, over ℤ or a field."""

    def __init__(self, generators: List[List[Coefficient]], nrows: int, ring: Ring):
        self.ring = ring
        self.generators = generators
        self.nrows = nrows
        if ring.is_field:
            self._solver = SpanSolver(generators, nrows, ring)
        else:
            # rows of the matrix whose columns are the generators
            self._matrix = [[g[i] for g in generators] for i in range(nrows)]

    def express(self, vec: List[Coefficient]) -> List[Coefficient]:
        if self.ring.is_field:
            out = self._solver.express(vec)
        else:
            out = integer_solve(self._matrix, len(self.generators), vec)
        if out is None:
            raise ValueError("vector is outside the expected span")
        return out


def _normalized_data(
    a: SimplicialAbelianGroup,
) -> Tuple[ChainComplex, Dict[int, List[List[Coefficient]]]]:
    """The normalized complex N(a) together with the inclusion vectors of its
    basis into the levels of ``a``."""
    ring = a.ring
    kernels: Dict[int, List[List[Coefficient]]] = {}
    for n in sorted(a.levels):
        r = a.rank(n)
        if n == 0:
            kernels[0] = [[ring.one if i == j else ring.zero for i in range(r)] for j in range(r)]
            continue
        rows: List[List[Coefficient]] = []
        for i in range(n):
            cols = a.face(n, i)
            nrows = a.rank(n - 1)
            for t in range(nrows):
                rows.append([cols[j].get(t, ring.zero) for j in range(r)])
        kernels[n] = _kernel_basis(rows, r, ring)
    basis: Dict[int, List[Cell]] = {}
    for n, vecs in kernels.items():
        basis[n] = [Cell(n, ("N", a.name, n, j)) for j in range(len(vecs))]
    boundary: Dict[Cell, Chain] = {}
    for n in sorted(kernels):
        if n == 0 or n - 1 not in kernels or not kernels[n - 1]:
            for b in basis.get(n, []):
                boundary[b] = zero_chain(ring, n - 1)
            continue
        expresser = _Expresser(kernels[n - 1], a.rank(n - 1), ring)
        sign = ring.coerce(-1 if n % 2 else 1)
        for j, vec in enumerate(kernels[n]):
            image = _apply_columns(a.face(n, n), vec, ring, a.rank(n - 1))
            image = [ring.mul(sign, x) for x in image]
            coords = expresser.express(image)
            terms = {
                basis[n - 1][t]: c for t, c in enumerate(coords) if not ring.is_zero(c)
            }
            boundary[basis[n][j]] = Chain(ring, n - 1, terms)
    return ChainComplex(ring, basis, boundary, a.truncation_dim), kernels


def normalized_of_sab(a: SimplicialAbelianGroup) -> ChainComplex:
    """N(a): degree n is ⋂_{i<n} ker d_i, boundary (−1)ⁿ d_n restricted."""
    return _normalized_data(a)[0]


# ---------------------------------------------------------------------------
# The functor Γ
# ---------------------------------------------------------------------------


def gamma(c: ChainComplex, truncation: int, name: str = "") -> SimplicialAbelianGroup:
    """Γ(C)_m = ⊕_{m↠n} C_n with formal degeneracies.

    A generator of level m is (canonical word of a surjection [m]↠[n], basis
    element of C_n).  A face d_i factors the composite surjection∘δ_i into
    epi∘mono; the mono contributes the identity when trivial, (−1)ⁿ·∂ when it
    omits the last vertex, and zero otherwise — the sign makes N(Γ(C)) equal
    to C on the nose with the (−1)ⁿ d_n normalization.
    """
    if any(n < 0 for n in c.degrees()):
        raise ValueError("gamma needs a nonnegatively graded complex")
    ring = c.ring
    levels: Dict[int, List[object]] = {}
    index: Dict[Tuple[int, Tuple[int, ...], int, int], int] = {}
    for m in range(truncation + 1):
        labels: List[object] = []
        for n in c.degrees():
            if n > m:
                continue
            for word in all_surjection_words(m, n):
                for j in range(c.rank(n)):
                    index[(m, word, n, j)] = len(labels)
                    labels.append(("G", word, n, j))
        levels[m] = labels
    face_maps: Dict[Tuple[int, int], Columns] = {}
    degeneracy_maps: Dict[Tuple[int, int], Columns] = {}
    for m in range(truncation + 1):
        for i in range(m + 1):
            if m > 0:
                cols: Columns = []
                for (_, word, n, j) in levels[m]:
                    new_word, missing = compose_face(word, m, i)
                    col: Dict[int, Coefficient] = {}
                    if missing is None:
                        col[index[(m - 1, new_word, n, j)]] = ring.one
                    elif missing == n:
                        sign = ring.coerce(-1 if n % 2 else 1)
                        source = c.basis_in(n)[j]
                        for face, coeff in c.boundary_of_basis(source).terms.items():
                            t = c.index_of(face)
                            row = index[(m - 1, new_word, n - 1, t)]
                            v = ring.add(col.get(row, ring.zero), ring.mul(sign, coeff))
                            if ring.is_zero(v):
                                col.pop(row, None)
                            else:
                                col[row] = v
                    cols.append(col)
                face_maps[(m, i)] = cols
            if m + 1 <= truncation:
                degeneracy_maps[(m, i)] = [
                    {index[(m + 1, compose_degeneracy(word, m, i), n, j)]: ring.one}
                    for (_, word, n, j) in levels[m]
                ]
    return SimplicialAbelianGroup(ring, levels, face_maps, degeneracy_maps, truncation, name=name or "gamma")


def dold_kan_round_trip(c: ChainComplex, truncation: Optional[int] = None) -> bool:
    """N(Γ(C)) ≅ C via the explicit projection onto the identity-surjection
    summand: checks it is a degreewise bijection commuting with boundaries."""
    ring = c.ring
    top = max(c.degrees(), default=0)
    if truncation is None:
        truncation = top + 1
    g = gamma(c, truncation)
    normalized, kernels = _normalized_data(g)

    def project(m: int, vec: List[Coefficient]) -> List[Coefficient]:
        # coordinates of the identity-word summand C_m inside level m
        out = []
        for j in range(c.rank(m)):
            pos = g.levels[m].index(("G", (), m, j))
            out.append(vec[pos])
        return out

    for m in range(min(truncation, top + 1) + 1):
        vecs = kernels.get(m, [])
        if len(vecs) != c.rank(m):
            return False
        if not vecs:
            continue
        projected = [project(m, v) for v in vecs]
        # bijectivity of the projection restricted to N
        if ring.is_field:
            solver = SpanSolver(projected, c.rank(m), ring)
            units = [solver.express([ring.one if i == j else ring.zero for i in range(c.rank(m))]) for j in range(c.rank(m))]
            if any(u is None for u in units):
                return False
        else:
            matrix = [[projected[j][i] for j in range(len(projected))] for i in range(c.rank(m))]
            for j in range(c.rank(m)):
                unit = [1 if i == j else 0 for i in range(c.rank(m))]
                if integer_solve(matrix, len(projected), unit) is None:
                    return False
        # the projection intertwines ∂_N with ∂_C
        if m == 0:
            continue
        lower = kernels.get(m - 1, [])
        for j, vec in enumerate(vecs):
            b = normalized.boundary_of_basis(normalized.basis_in(m)[j])
            dense = [ring.zero] * g.rank(m - 1)
            for cell, coeff in b.terms.items():
                t = normalized.index_of(cell)
                for pos, x in enumerate(lower[t]):
                    dense[pos] = ring.add(dense[pos], ring.mul(coeff, x))
            left = project(m - 1, dense)
            # ∂_C applied to the projection of vec
            proj = project(m, vec)
            right = [ring.zero] * c.rank(m - 1)
            for jj, x in enumerate(proj):
                if ring.is_zero(x):
                    continue
                for face, coeff in c.boundary_of_basis(c.basis_in(m)[jj]).terms.items():
                    t = c.index_of(face)
                    right[t] = ring.add(right[t], ring.mul(x, coeff))
            if left != right:
                return False
    return True


# ---------------------------------------------------------------------------
# Free (pointed) simplicial abelian groups on a simplicial set
# ---------------------------------------------------------------------------


def _basepoint_index(x: SimplicialSetPresentation, n: int) -> int:
    """Index of the n-fold degeneracy of the basepoint vertex."""
    bp = x.basepoint if x.basepoint is not None else 0
    return x.apply_word(0, bp, tuple(range(n - 1, -1, -1))) if n > 0 else bp


def free_simplicial_abelian(
    x: SimplicialSetPresentation, ring: Ring, pointed: bool = False, name: str = ""
) -> SimplicialAbelianGroup:
    """ℛX: levels free on the cells of x; pointed variant R̃X quotients by the
    basepoint degeneracy chain (one basis vector per level)."""
    dropped: Dict[int, Optional[int]] = {}
    if pointed:
        if x.n_cells(0) == 0:
            raise ValueError("pointed variant needs at least one vertex")
        for n in range(x.truncation_dim + 1):
            dropped[n] = _basepoint_index(x, n) if x.n_cells(n) else None
    levels: Dict[int, List[object]] = {}
    reindex: Dict[Tuple[int, int], int] = {}
    for n in sorted(x.cells):
        labels = []
        for idx in range(x.n_cells(n)):
            if pointed and dropped.get(n) == idx:
                continue
            reindex[(n, idx)] = len(labels)
            labels.append(x.basis_cell(n, idx).label)
        levels[n] = labels
    face_maps: Dict[Tuple[int, int], Columns] = {}
    degeneracy_maps: Dict[Tuple[int, int], Columns] = {}
    for n in sorted(x.cells):
        for i in range(n + 1):
            if n > 0:
                cols = []
                for idx in range(x.n_cells(n)):
                    if (n, idx) not in reindex:
                        continue
                    target = x.face(n, idx, i)
                    cols.append({reindex[(n - 1, target)]: ring.one} if (n - 1, target) in reindex else {})
                face_maps[(n, i)] = cols
            if n + 1 <= x.truncation_dim and (n, 0) in x.degeneracies:
                cols = []
                for idx in range(x.n_cells(n)):
                    if (n, idx) not in reindex:
                        continue
                    target = x.degeneracy(n, idx, i)
                    cols.append({reindex[(n + 1, target)]: ring.one} if (n + 1, target) in reindex else {})
                degeneracy_maps[(n, i)] = cols
    label = name or (f"R~({x.name})" if pointed else f"R({x.name})")
    return SimplicialAbelianGroup(ring, levels, face_maps, degeneracy_maps, x.truncation_dim, name=label)


def pointed_unnormalized_chains(x: SimplicialSetPresentation, ring: Ring) -> ChainComplex:
    """C(X) modulo the basepoint degeneracy chain: one basis cell dropped per
    degree, boundary entries through the dropped cells erased."""
    dropped = {n: _basepoint_index(x, n) for n in sorted(x.cells)}
    basis: Dict[int, List[Cell]] = {}
    kept: Dict[int, List[int]] = {}
    for n in sorted(x.cells):
        kept[n] = [i for i in range(x.n_cells(n)) if i != dropped[n]]
        basis[n] = [x.basis_cell(n, i) for i in kept[n]]
    boundary: Dict[Cell, Chain] = {}
    for n in sorted(x.cells):
        for idx in kept[n]:
            b = x.basis_cell(n, idx)
            if n == 0:
                boundary[b] = Chain(ring, -1, {})
                continue
            terms: Dict[Cell, Coefficient] = {}
            for i in range(n + 1):
                f = x.face(n, idx, i)
                if f == dropped[n - 1]:
                    continue
                facet = x.basis_cell(n - 1, f)
                sign = ring.coerce(-1 if i % 2 else 1)
                terms[facet] = ring.add(terms.get(facet, ring.zero), sign)
            boundary[b] = Chain(ring, n - 1, terms)
    return ChainComplex(ring, basis, boundary, x.truncation_dim)


# ---------------------------------------------------------------------------
# Hurewicz maps and the retraction γ
# ---------------------------------------------------------------------------


def chain_hurewicz(x: SimplicialSetPresentation, ring: Ring) -> GradedMap:
    """C(h): pointed C(X) → C(R̃X) = Moore complex of R̃X, cell ↦ 1·cell.

    Under the canonical basis identification the two complexes are equal, so
    the map carries each basis cell to the generator with the same label.
    """
    source = pointed_unnormalized_chains(x, ring)
    target = moore_complex(free_simplicial_abelian(x, ring, pointed=True))
    return GradedMap(source, target, 0, lambda basis: chain_of(ring, basis))


def gamma_X(x: SimplicialSetPresentation, ring: Ring) -> GradedMap:
    """γ: C(R̃X) → pointed C(X), sending each chain-generator of R̃X to the
    combination of simplices of X it denotes (1·σ ↦ σ), extended linearly."""
    source = moore_complex(free_simplicial_abelian(x, ring, pointed=True))
    target = pointed_unnormalized_chains(x, ring)
    return GradedMap(source, target, 0, lambda basis: chain_of(ring, basis))


def hurewicz_chain_map(x: SimplicialSetPresentation, ring: Ring) -> GradedMap:
    """N(h): N(X) → N(R̃X), σ ↦ the normalization of 1·σ.

    The generator 1·σ is projected into ⋂ ker d_i with the standard
    normalization operator P = (1 − s_{n−1}d_{n−1})⋯(1 − s_0 d_0) and
    expressed in the computed kernel basis.  The basepoint chain maps to zero
    (it is the quotiented direction), so on a reduced space degree 0 is the
    zero map.
    """
    a = free_simplicial_abelian(x, ring, pointed=True)
    target, kernels = _normalized_data(a)
    source = x.normalized_chains(ring)
    position = {(n, label): i for n, labels in a.levels.items() for i, label in enumerate(labels)}
    expressers: Dict[int, _Expresser] = {}

    def action(basis: Cell) -> Chain:
        n = basis.degree
        if not kernels.get(n):
            return zero_chain(ring, n)
        pos = position.get((n, basis.label))
        if pos is None:  # the basepoint chain itself
            return zero_chain(ring, n)
        vec = [ring.zero] * a.rank(n)
        vec[pos] = ring.one
        for i in range(n):  # P = Π (1 − s_i d_i), innermost i = 0
            down = _apply_columns(a.face(n, i), vec, ring, a.rank(n - 1))
            back = _apply_columns(a.degeneracy(n - 1, i), down, ring, a.rank(n))
            vec = [ring.add(u, ring.neg(v)) for u, v in zip(vec, back)]
        if n not in expressers:
            expressers[n] = _Expresser(kernels[n], a.rank(n), ring)
        coords = expressers[n].express(vec)
        terms = {
            target.basis_in(n)[t]: c for t, c in enumerate(coords) if not ring.is_zero(c)
        }
        return Chain(ring, n, terms)

    return GradedMap(source, target, 0, action)


# ---------------------------------------------------------------------------
# The diagonal on R̃X and the Hurewicz square
# ---------------------------------------------------------------------------


def _sab_iterated_face(a: SimplicialAbelianGroup, n: int, idx: int, keep: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Follow an iterated face of a generator through single-generator face
    maps; None when the face is zero (a quotiented basepoint cell)."""
    drop = [j for j in range(n + 1) if j not in set(keep)]
    dim, cur = n, idx
    for j in sorted(drop, reverse=True):
        col = a.face(dim, j)[cur]
        if not col:
            return None
        if len(col) != 1 or next(iter(col.values())) != a.ring.one:
            raise ValueError("face of a generator is not a single generator")
        cur = next(iter(col))
        dim -= 1
    return dim, cur


def xi_sab_generator(
    b: BarElement, a: SimplicialAbelianGroup, n: int, idx: int, table: DiagonalTable, ring: Ring
) -> Chain:
    """ξ(b⊗g) for a generator g of a free simplicial abelian group, via the
    colimit extension; terms through a zero face vanish."""
    from .bar import twist_act

    acc: Dict[object, Coefficient] = {}
    for (left, right), coeff in table.raw(b.level, n).items():
        fa = _sab_iterated_face(a, n, idx, left)
        fb = _sab_iterated_face(a, n, idx, right)
        if fa is None or fb is None:
            continue
        key = TensorPair(a.basis_cell(*fa), a.basis_cell(*fb))
        acc[key] = ring.add(acc.get(key, ring.zero), ring.coerce(coeff))
    chain = Chain(ring, b.level + n, acc)
    if b.twist:
        chain = twist_act(chain)
    return chain


def hurewicz_square_defect(
    x: SimplicialSetPresentation,
    ring: Ring,
    table: DiagonalTable,
    level: int,
    n: int,
    idx: int,
) -> Chain:
    """(C(h)⊗C(h))∘ξ_X − ξ_{R̃X}∘(1⊗C(h)) on the cell (n, idx) at bar level
    ``level``; zero iff the Hurewicz map respects the diagonal there."""
    from .bar import e

    a = free_simplicial_abelian(x, ring, pointed=True)
    kept = {(m, label) for m, labels in a.levels.items() for label in labels}
    full = xi_cell(e(level), x, n, idx, table, ring)
    lhs_terms: Dict[object, Coefficient] = {}
    for pair, coeff in full.terms.items():
        if (pair.left.degree, pair.left.label) in kept and (pair.right.degree, pair.right.label) in kept:
            lhs_terms[pair] = coeff
    lhs = Chain(ring, full.degree, lhs_terms)
    label = x.basis_cell(n, idx).label
    if (n, label) not in kept:
        rhs = zero_chain(ring, full.degree)
    else:
        rhs = xi_sab_generator(e(level), a, n, a.levels[n].index(label), table, ring)
    return lhs - rhs
