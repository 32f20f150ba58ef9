"""Exact linear algebra: Smith normal form over ℤ, Gaussian elimination over
fields, a bit-packed 𝔽₂ fast path, and homology with explicit cycle bases and
change-of-basis data.

Matrices are dense lists of rows.  Over 𝔽₂ rows are Python integers used as
bitsets (bit j = column j), which keeps row operations at C speed without any
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .rings import Coefficient, Ring

Matrix = List[List[Coefficient]]
Vector = List[Coefficient]


# ---------------------------------------------------------------------------
# Smith normal form over the integers
# ---------------------------------------------------------------------------


def smith_normal_form(a: Matrix) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    """Return (D, U, Uinv, V) with U·A·V = D diagonal, U and V unimodular.

    Pivoting picks the smallest nonzero absolute value, which keeps
    intermediate entries tame at desk scale.  ``Uinv`` is maintained alongside
    U because homology representatives need it.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [list(row) for row in a]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    uinv = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for r in range(rows):  # column swap on Uinv
            uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

    def col_swap(i, j):
        for r in range(rows):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def row_add(dst, src, k):  # row dst += k * row src
        if k == 0:
            return
        drow, srow = d[dst], d[src]
        for c in range(cols):
            drow[c] += k * srow[c]
        urow, usrow = u[dst], u[src]
        for c in range(rows):
            urow[c] += k * usrow[c]
        for r in range(rows):  # Uinv column src -= k * column dst
            uinv[r][src] -= k * uinv[r][dst]

    def col_add(dst, src, k):  # col dst += k * col src
        if k == 0:
            return
        for r in range(rows):
            d[r][dst] += k * d[r][src]
        for r in range(cols):
            v[r][dst] += k * v[r][src]

    def row_negate(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for r in range(rows):
            uinv[r][i] = -uinv[r][i]

    t = 0
    while t < min(rows, cols):
        # locate smallest-magnitude nonzero pivot in the remaining block
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = d[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        row_swap(t, pi)
        col_swap(t, pj)
        while True:
            p = d[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    q = d[i][t] // p
                    row_add(i, t, -q)
                    if d[i][t] != 0:
                        row_swap(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    q = d[t][j] // p
                    col_add(j, t, -q)
                    if d[t][j] != 0:
                        col_swap(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # row and column cleared; enforce that the pivot divides the rest
            p = d[t][t]
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if d[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, 1)
        if d[t][t] < 0:
            row_negate(t)
        t += 1
    return d, u, uinv, v


def integer_kernel(a: Matrix, ncols: int) -> List[Vector]:
    """Basis of the kernel lattice of an integer matrix (a saturated summand)."""
    if not a:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    d, _, _, v = smith_normal_form(a)
    r = 0
    while r < min(len(d), ncols) and d[r][r] != 0:
        r += 1
    return [[v[i][j] for i in range(ncols)] for j in range(r, ncols)]


def integer_solve(a: Matrix, ncols: int, b: Vector) -> Optional[Vector]:
    """A solution x of A·x = b over ℤ, or None when none exists."""
    if not a:
        return [0] * ncols if all(x == 0 for x in b) else None
    d, u, _, v = smith_normal_form(a)
    ub = [sum(u[i][k] * b[k] for k in range(len(b))) for i in range(len(a))]
    y = [0] * ncols
    for i in range(len(a)):
        di = d[i][i] if i < ncols else 0
        if di == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % di != 0:
                return None
            y[i] = ub[i] // di
    return [sum(v[i][j] * y[j] for j in range(ncols)) for i in range(ncols)]


# ---------------------------------------------------------------------------
# Generic field elimination
# ---------------------------------------------------------------------------


def rref_field(rows: Matrix, ncols: int, ring: Ring) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form over a field; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(rows)):
            if not ring.is_zero(rows[i][col]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = ring.inv(rows[rank][col])
        rows[rank] = [ring.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not ring.is_zero(rows[i][col]):
                factor = rows[i][col]
                rows[i] = [ring.add(x, ring.neg(ring.mul(factor, y))) for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def field_kernel(rows: Matrix, ncols: int, ring: Ring) -> List[Vector]:
    """Basis of the kernel of a row-matrix over a field."""
    rref, pivots = rref_field(rows, ncols, ring)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ring.zero] * ncols
        vec[free] = ring.one
        for r, p in enumerate(pivots):
            vec[p] = ring.neg(rref[r][free])
        basis.append(vec)
    return basis


class SpanSolver:
    """Expresses vectors in the span of a fixed generating set over a field.

    Built once from generators (as vectors of length ``ncols``); ``express``
    returns the coefficient list over the original generators, or None when
    the vector is outside the span.
    """

    def __init__(self, generators: Sequence[Vector], ncols: int, ring: Ring):
        self.ring = ring
        self.ncols = ncols
        self.ngen = len(generators)
        augmented = []
        for i, g in enumerate(generators):
            tail = [ring.zero] * self.ngen
            tail[i] = ring.one
            augmented.append(list(g) + tail)
        self._rows, pivots = rref_field(augmented, ncols, ring)
        self._pivots = [p for p in pivots if p < ncols]

    def express(self, vec: Vector) -> Optional[Vector]:
        ring = self.ring
        work = list(vec) + [ring.zero] * self.ngen
        for row, p in zip(self._rows, self._pivots):
            factor = work[p]
            if not ring.is_zero(factor):
                work = [ring.add(x, ring.neg(ring.mul(factor, y))) for x, y in zip(work, row)]
        if any(not ring.is_zero(x) for x in work[: self.ncols]):
            return None
        return [ring.neg(x) for x in work[self.ncols :]]


# ---------------------------------------------------------------------------
# Bit-packed 𝔽₂ elimination (rows are Python ints used as bitsets)
# ---------------------------------------------------------------------------


def f2_pack(vec: Sequence[int]) -> int:
    word = 0
    for j, x in enumerate(vec):
        if x % 2:
            word |= 1 << j
    return word


def f2_unpack(word: int, ncols: int) -> Vector:
    return [(word >> j) & 1 for j in range(ncols)]


def f2_rref(rows: List[int], ncols: int) -> Tuple[List[int], List[int]]:
    """RREF of packed 𝔽₂ rows; pivots restricted to the first ``ncols`` bits."""
    reduced: List[int] = []
    pivots: List[int] = []
    for row in rows:
        for r, p in zip(reduced, pivots):
            if (row >> p) & 1:
                row ^= r
        if row:
            low = row & ((1 << ncols) - 1)
            if low == 0:
                continue
            p = (low & -low).bit_length() - 1
            # back-substitute into existing rows
            for i in range(len(reduced)):
                if (reduced[i] >> p) & 1:
                    reduced[i] ^= row
            reduced.append(row)
            pivots.append(p)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [reduced[i] for i in order], sorted(pivots)


def f2_kernel(rows: List[int], ncols: int) -> List[int]:
    rref, pivots = f2_rref(list(rows), ncols)
    pivot_set = set(pivots)
    basis: List[int] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for row, p in zip(rref, pivots):
            if (row >> free) & 1:
                vec |= 1 << p
        basis.append(vec)
    return basis


class F2SpanSolver:
    """𝔽₂ analogue of SpanSolver with packed rows and an identity augmentation."""

    def __init__(self, generators: Sequence[int], ncols: int):
        self.ncols = ncols
        self.ngen = len(generators)
        augmented = [g | (1 << (ncols + i)) for i, g in enumerate(generators)]
        self._rows, self._pivots = f2_rref(augmented, ncols)

    def express(self, vec: int) -> Optional[int]:
        work = vec
        for row, p in zip(self._rows, self._pivots):
            if (work >> p) & 1:
                work ^= row
        if work & ((1 << self.ncols) - 1):
            return None
        return work >> self.ncols


# ---------------------------------------------------------------------------
# Homology of a pair of boundary matrices
# ---------------------------------------------------------------------------


@dataclass
class HomologyDescriptor:
    """Homology at one degree: rank/torsion, cycle representatives, coordinates.

    ``representatives[i]`` is a cycle vector (over the degree-n basis)
    generating the i-th summand; torsion summands come first, in the order of
    ``torsion``.  ``coordinates`` expresses any cycle vector in the same
    order (torsion coordinates reduced mod the torsion order).
    """

    ring: Ring
    free_rank: int
    torsion: List[int] = field(default_factory=list)
    representatives: List[Vector] = field(default_factory=list)
    _coord_fn: object = None

    @property
    def dimension(self) -> int:
        if not self.ring.is_field:
            raise ValueError("dimension only makes sense over a field")
        return self.free_rank

    def coordinates(self, cycle: Vector) -> Vector:
        if self._coord_fn is None:
            raise ValueError("no coordinate data attached")
        coords = self._coord_fn(cycle)
        if coords is None:
            raise ValueError("vector is not a cycle in this degree")
        return coords

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        if self.ring.is_field:
            return f"{self.ring}^{self.free_rank}"
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def _columns_to_rows(cols: Sequence[Dict[int, Coefficient]], nrows: int, ring: Ring) -> Matrix:
    rows = [[ring.zero] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            rows[i][j] = ring.coerce(x)
    return rows


def homology_of_matrices(
    ring: Ring,
    boundary_out: Sequence[Dict[int, Coefficient]],
    nrows_out: int,
    boundary_in: Sequence[Dict[int, Coefficient]],
    rank_here: int,
) -> HomologyDescriptor:
    """Homology ker(∂_out)/im(∂_in).

    ``boundary_out`` holds the sparse columns of ∂: C_n → C_{n−1} (``nrows_out``
    rows); ``boundary_in`` the sparse columns of ∂: C_{n+1} → C_n; ``rank_here``
    is the rank of C_n.
    """
    if ring.characteristic == 2:
        return _homology_f2(boundary_out, boundary_in, rank_here, ring)
    if ring.is_field:
        return _homology_field(ring, boundary_out, nrows_out, boundary_in, rank_here)
    return _homology_integers(boundary_out, nrows_out, boundary_in, rank_here)


def _homology_integers(boundary_out, nrows_out, boundary_in, rank_here) -> HomologyDescriptor:
    from .rings import ZZ

    out_rows = _columns_to_rows(boundary_out, nrows_out, ZZ)
    kernel = integer_kernel(out_rows, rank_here)
    m = len(kernel)
    # express the image in kernel coordinates: K · y = image column
    k_rows = [[kernel[j][i] for j in range(m)] for i in range(rank_here)]
    image_coords: List[Vector] = []
    for col in boundary_in:
        vec = [col.get(i, 0) for i in range(rank_here)]
        y = integer_solve(k_rows, m, vec)
        if y is None:
            raise ArithmeticError("boundary image escaped the cycle lattice (∂²≠0?)")
        image_coords.append(y)
    if image_coords:
        x_rows = [[image_coords[j][i] for j in range(len(image_coords))] for i in range(m)]
        d, u, uinv, _ = smith_normal_form(x_rows)
        diag = [d[i][i] for i in range(min(m, len(image_coords)))]
    else:
        diag = []
        u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        uinv = [row[:] for row in u]
    r = sum(1 for x in diag if x != 0)
    torsion = [x for x in diag if x > 1]
    torsion_idx = [i for i, x in enumerate(diag) if x > 1]
    free_idx = list(range(r, m))
    reps: List[Vector] = []
    for i in torsion_idx + free_idx:
        coords = [uinv[row][i] for row in range(m)]
        reps.append([sum(kernel[j][c] * coords[j] for j in range(m)) for c in range(rank_here)])

    def coord_fn(cycle: Vector) -> Optional[Vector]:
        y = integer_solve(k_rows, m, list(cycle))
        if y is None:
            return None
        c = [sum(u[i][j] * y[j] for j in range(m)) for i in range(m)]
        out = []
        for pos, i in enumerate(torsion_idx):
            out.append(c[i] % torsion[pos])
        out.extend(c[i] for i in free_idx)
        return out

    return HomologyDescriptor(ZZ, m - r, torsion, reps, coord_fn)


def _homology_field(ring, boundary_out, nrows_out, boundary_in, rank_here) -> HomologyDescriptor:
    out_rows = _columns_to_rows(boundary_out, nrows_out, ring)
    kernel = field_kernel(out_rows, rank_here, ring) if out_rows else [
        [ring.one if i == j else ring.zero for i in range(rank_here)] for j in range(rank_here)
    ]
    m = len(kernel)
    solver = SpanSolver(kernel, rank_here, ring)
    image_coords: List[Vector] = []
    for col in boundary_in:
        vec = [ring.coerce(col.get(i, 0)) for i in range(rank_here)]
        y = solver.express(vec)
        if y is None:
            raise ArithmeticError("boundary image escaped the cycle space (∂²≠0?)")
        image_coords.append(y)
    image_rref, pivots = rref_field(image_coords, m, ring)
    pivot_set = set(pivots)
    free_idx = [i for i in range(m) if i not in pivot_set]
    reps = [kernel[i] for i in free_idx]

    def coord_fn(cycle: Vector) -> Optional[Vector]:
        y = solver.express([ring.coerce(x) for x in cycle])
        if y is None:
            return None
        for row, p in zip(image_rref, pivots):
            factor = y[p]
            if not ring.is_zero(factor):
                y = [ring.add(a, ring.neg(ring.mul(factor, b))) for a, b in zip(y, row)]
        return [y[i] for i in free_idx]

    return HomologyDescriptor(ring, len(free_idx), [], reps, coord_fn)


def _homology_f2(boundary_out, boundary_in, rank_here, ring) -> HomologyDescriptor:
    nout = len(boundary_out)
    # rows of ∂_out as bitsets over the C_n index: row i has bit j iff M[i][j]=1.
    row_bits: Dict[int, int] = {}
    for j, col in enumerate(boundary_out):
        for i, x in col.items():
            if x % 2:
                row_bits[i] = row_bits.get(i, 0) | (1 << j)
    kernel = f2_kernel(list(row_bits.values()), rank_here) if nout else []
    if not nout:
        kernel = [1 << j for j in range(rank_here)]
    m = len(kernel)
    solver = F2SpanSolver(kernel, rank_here)
    image_coords: List[int] = []
    for col in boundary_in:
        vec = 0
        for i, x in col.items():
            if x % 2:
                vec |= 1 << i
        y = solver.express(vec)
        if y is None:
            raise ArithmeticError("boundary image escaped the cycle space (∂²≠0?)")
        image_coords.append(y)
    image_rref, pivots = f2_rref(image_coords, m)
    pivot_set = set(pivots)
    free_idx = [i for i in range(m) if i not in pivot_set]
    reps = [f2_unpack(kernel[i], rank_here) for i in free_idx]

    def coord_fn(cycle: Vector) -> Optional[Vector]:
        y = solver.express(f2_pack([int(x) % 2 for x in cycle]))
        if y is None:
            return None
        for row, p in zip(image_rref, pivots):
            if (y >> p) & 1:
                y ^= row
        return [(y >> i) & 1 for i in free_idx]

    return HomologyDescriptor(ring, len(free_idx), [], reps, coord_fn)
