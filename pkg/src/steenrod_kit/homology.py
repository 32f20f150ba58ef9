"""Homology and cohomology of a ChainComplex, with representatives and
coordinates (delegates the linear algebra to ``linalg``)."""

from __future__ import annotations

from typing import Dict, List

from .chains import Chain, ChainComplex
from .linalg import HomologyDescriptor, homology_of_matrices
from .rings import Coefficient


def homology(complex_: ChainComplex, degree: int) -> HomologyDescriptor:
    """H_degree: ker ∂ / im ∂, as rank + torsion (or dimension over a field),
    with cycle representatives and coordinate data."""
    if degree + 1 > complex_.truncation_dim and not complex_.exhaustive:
        raise ValueError(
            f"degree {degree} needs boundaries up to {degree + 1}, "
            f"but the complex is truncated at {complex_.truncation_dim}"
        )
    boundary_out = complex_.boundary_matrix(degree) if degree > 0 else [
        {} for _ in range(complex_.rank(degree))
    ]
    boundary_in = complex_.boundary_matrix(degree + 1)
    return homology_of_matrices(
        complex_.ring,
        boundary_out,
        complex_.rank(degree - 1) if degree > 0 else 0,
        boundary_in,
        complex_.rank(degree),
    )


def coboundary_matrix(complex_: ChainComplex, p: int) -> List[Dict[int, Coefficient]]:
    """Columns of δ: C^p → C^{p+1} (transpose of ∂_{p+1}); (δu)(σ) = u(∂σ)."""
    cols: List[Dict[int, Coefficient]] = [{} for _ in range(complex_.rank(p))]
    for j, col in enumerate(complex_.boundary_matrix(p + 1)):
        for i, value in col.items():
            cols[i][j] = value
    return cols


def cohomology(complex_: ChainComplex, degree: int) -> HomologyDescriptor:
    """H^degree of the dual complex; representatives are cocycle vectors over
    the degree-``degree`` basis."""
    if degree + 1 > complex_.truncation_dim and not complex_.exhaustive:
        raise ValueError(
            f"degree {degree} needs the complex up to {degree + 1}, "
            f"but it is truncated at {complex_.truncation_dim}"
        )
    out_cols = coboundary_matrix(complex_, degree)
    in_cols = coboundary_matrix(complex_, degree - 1) if degree > 0 else []
    return homology_of_matrices(
        complex_.ring,
        out_cols,
        complex_.rank(degree + 1),
        in_cols,
        complex_.rank(degree),
    )


def chain_from_vector(complex_: ChainComplex, degree: int, vector) -> Chain:
    terms = {
        basis: coeff
        for basis, coeff in zip(complex_.basis_in(degree), vector)
    }
    return Chain(complex_.ring, degree, terms)


def vector_from_chain(complex_: ChainComplex, chain: Chain):
    vec = [complex_.ring.zero] * complex_.rank(chain.degree)
    for basis, coeff in chain.terms.items():
        vec[complex_.index_of(basis)] = coeff
    return vec
