"""The acceptance gate: one test per advertised guarantee.

Each test states the guarantee in its name and exercises it end to end.  Two
published displays of the level-1 diagonal carry the opposite overall sign
from the value forced by the chain-map identity; those two tests assert the
displays verbatim and are expected to fail, strictly — see README
("documented deviations") for the analysis.
"""

import random
import time
from itertools import combinations

import pytest

from steenrod_kit.bar import e, eta
from steenrod_kit.chains import Chain, Simplex, TensorPair, hom_differential, render_chain, standard_simplex
from steenrod_kit.cli import EXIT_OK, main
from steenrod_kit.cochains import sq_matrix
from steenrod_kit.diagonal import (
    DiagonalTable,
    aw_diagonal,
    chain_map_defect,
    check_prime3,
    equivariance_defect,
    top_diagonal_sign,
    xi_simplex,
)
from steenrod_kit.documents import load_corpus
from steenrod_kit.dold_kan import (
    chain_hurewicz,
    dold_kan_round_trip,
    free_simplicial_abelian,
    gamma_X,
    hurewicz_square_defect,
    moore_complex,
    pointed_unnormalized_chains,
)
from steenrod_kit.homology import cohomology, homology
from steenrod_kit.rings import F2, F5, QQ, ZZ
from steenrod_kit.simplicial import freely_add_degeneracies, is_degeneracy_free
from steenrod_kit.suite import FAST_CORPUS, _random_complex
from steenrod_kit.vandermonde import vandermonde_det_factorization, vandermonde_independence

TABLE = DiagonalTable()

SIGN_NOTE = (
    "published display carries the opposite overall sign from the value "
    "forced by the chain-map identity (see README: documented deviations)"
)


# -- 1. golden Alexander-Whitney diagonal ------------------------------------


def test_criterion_01_aw_golden(capsys):
    start = time.monotonic()
    chain = aw_diagonal(standard_simplex(2))
    assert chain.terms == {
        TensorPair(Simplex((0, 1, 2)), Simplex((2,))): 1,
        TensorPair(Simplex((0, 1)), Simplex((1, 2))): 1,
        TensorPair(Simplex((0,)), Simplex((0, 1, 2))): 1,
    }
    assert render_chain(chain) == "[0]⊗[0,1,2] + [0,1]⊗[1,2] + [0,1,2]⊗[2]"
    # the same value through the CLI, canonically rendered
    assert main(["diag", "--n", "0", "--simplex", "0,1,2"]) == EXIT_OK
    assert "[0]⊗[0,1,2] + [0,1]⊗[1,2] + [0,1,2]⊗[2]" in capsys.readouterr().out
    assert time.monotonic() - start < 1.0


# -- 2. golden level-1 diagonal on the 2-simplex -----------------------------


@pytest.mark.xfail(strict=True, reason=SIGN_NOTE)
def test_criterion_02_level1_golden():
    got = xi_simplex(e(1), standard_simplex(2), TABLE)
    assert got.terms == {
        TensorPair(Simplex((0, 1, 2)), Simplex((1, 2))): 1,
        TensorPair(Simplex((0, 2)), Simplex((0, 1, 2))): -1,
        TensorPair(Simplex((0, 1, 2)), Simplex((0, 1))): -1,
    }


# -- 3. degenerate-simplex displays ------------------------------------------


@pytest.mark.xfail(strict=True, reason=SIGN_NOTE)
def test_criterion_03_degenerate_displays():
    got0 = xi_simplex(e(1), Simplex((0, 0, 1)), TABLE)
    display0 = (
        Chain(ZZ, 3, {TensorPair(Simplex((0, 0, 1)), Simplex((0, 1))): 1})
        + Chain(ZZ, 3, {TensorPair(Simplex((0, 1)), Simplex((0, 0, 1))): -1})
        + Chain(ZZ, 3, {TensorPair(Simplex((0, 0, 1)), Simplex((0, 0))): -1})
    )
    got1 = xi_simplex(e(1), Simplex((0, 1, 1)), TABLE)
    # the third printed term cancels the first; kept verbatim
    display1 = (
        Chain(ZZ, 3, {TensorPair(Simplex((0, 1, 1)), Simplex((1, 1))): 1})
        + Chain(ZZ, 3, {TensorPair(Simplex((0, 1)), Simplex((0, 1, 1))): -1})
        + Chain(ZZ, 3, {TensorPair(Simplex((0, 1, 1)), Simplex((1, 1))): -1})
    )
    assert got0 == display0 and got1 == display1


# -- 4. the top-diagonal sign law ---------------------------------------------


def test_criterion_04_top_diagonal_signs():
    start = time.monotonic()
    assert [eta(k) for k in range(7)] == [1, 1, -1, -1, 1, 1, -1]
    for k in range(7):
        assert top_diagonal_sign(k, TABLE) == eta(k)
    assert time.monotonic() - start < 60.0


@pytest.mark.slow
def test_criterion_04_top_diagonal_sign_k7():
    assert top_diagonal_sign(7, TABLE) == eta(7)


# -- 5. chain-map and equivariance identities, exhaustively -------------------


def test_criterion_05_chain_map_and_equivariance():
    violations = []
    for n in range(5):
        for k in range(6):
            if chain_map_defect(n, k, TABLE):
                violations.append(("chain-map", n, k))
            if equivariance_defect(n, k, TABLE):
                violations.append(("equivariance", n, k))
    assert violations == []


# -- 6. the arity-3 boundary identity ------------------------------------------


def test_criterion_06_prime3_identity():
    for k in range(5):
        assert check_prime3(k, TABLE), k


# -- 7. Steenrod squares --------------------------------------------------------


def test_criterion_07_sq0_identity_and_rp2_bockstein():
    for name in FAST_CORPUS:
        space = load_corpus(name)
        complex_ = space.chains(F2)
        for p in range(space.dimension + 1):
            rank = cohomology(complex_, p).dimension
            if rank == 0:
                continue
            columns = sq_matrix(0, p, space, F2, TABLE)
            assert columns == [
                [1 if i == j else 0 for i in range(rank)] for j in range(rank)
            ], (name, p)
    assert sq_matrix(1, 1, load_corpus("rp2"), F2, TABLE) == [[1]]


@pytest.mark.slow
def test_criterion_07_rp4_squares():
    start = time.monotonic()
    space = load_corpus("rp4")
    assert sq_matrix(1, 1, space, F2, TABLE) == [[1]]
    assert sq_matrix(2, 2, space, F2, TABLE) == [[1]]
    assert time.monotonic() - start < 600.0


# -- 8. Dold-Kan ----------------------------------------------------------------


def test_criterion_08_dold_kan():
    rng = random.Random(2024)
    for trial in range(50):
        ring = [ZZ, QQ, F2][trial % 3]
        c = _random_complex(rng, ring)
        assert c.check_dd_zero()
        assert dold_kan_round_trip(c), trial
    for name in ("circle", "boundary_delta3", "rp2"):
        x = freely_add_degeneracies(load_corpus(name), 4)
        m = moore_complex(free_simplicial_abelian(x, ZZ, pointed=True))
        pc = pointed_unnormalized_chains(x, ZZ)
        assert m.basis == pc.basis
        for n in m.degrees():
            for b in m.basis_in(n):
                assert m.boundary_of_basis(b) == pc.boundary_of_basis(b)
        space = load_corpus(name)
        oracle = space.chains(ZZ)
        for i in range(4):
            got = homology(m, i)
            if i <= space.dimension:
                want = homology(oracle, i)
                want_rank = want.free_rank - (1 if i == 0 else 0)
                want_torsion = list(want.torsion)
            else:
                want_rank, want_torsion = 0, []
            assert (got.free_rank, list(got.torsion)) == (want_rank, want_torsion), (name, i)


# -- 9. the retraction of the Hurewicz map ---------------------------------------


def test_criterion_09_gamma_retracts_hurewicz():
    for name in FAST_CORPUS:
        x = freely_add_degeneracies(load_corpus(name), 4)
        g, h = gamma_X(x, ZZ), chain_hurewicz(x, ZZ)
        pc = h.source
        for n in pc.degrees():
            for b in pc.basis_in(n):
                unit = Chain(ZZ, n, {b: 1})
                assert g(h(unit)) == unit, (name, b)


# -- 10. the Hurewicz map respects the diagonal -----------------------------------


def test_criterion_10_hurewicz_square():
    for name in ("circle", "boundary_delta3", "rp2"):
        x = freely_add_degeneracies(load_corpus(name), 3)
        for level in range(4):
            for n in sorted(x.cells):
                for idx in range(x.n_cells(n)):
                    defect = hurewicz_square_defect(x, ZZ, TABLE, level, n, idx)
                    assert defect.is_zero(), (name, level, n, idx)
        # the normalized Hurewicz map is itself a chain map
        assert hom_differential(chain_hurewicz(x, ZZ)).is_zero_on(range(4))


# -- 11. the independence witness ---------------------------------------------------


def test_criterion_11_vandermonde_witness():
    assert vandermonde_det_factorization(3)
    rng = random.Random(2024)
    edges = [Simplex(c) for c in combinations(range(6), 2)]
    for ring in (QQ, F5):
        for _ in range(200):
            t = rng.randint(1, 5)
            chains, seen = [], set()
            while len(chains) < t:
                terms = {
                    edge: ring.coerce(rng.randint(1, 4) * rng.choice([1, -1]))
                    for edge in rng.sample(edges, rng.randint(1, 4))
                }
                c = Chain(ring, 1, terms)
                if not c.is_zero() and c not in seen:
                    seen.add(c)
                    chains.append(c)
            assert vandermonde_independence(chains, ring)


# -- 12. degeneracy-freeness --------------------------------------------------------


def test_criterion_12_degeneracy_freeness():
    for name in FAST_CORPUS:
        assert is_degeneracy_free(freely_add_degeneracies(load_corpus(name), 4)), name
    assert not is_degeneracy_free(load_corpus("counterexample"))
