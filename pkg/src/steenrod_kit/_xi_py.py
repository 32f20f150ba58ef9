"""Pure-Python kernel for the equivariant diagonal recursion.

Works over ℤ on raw data: a diagonal value is a dict mapping a pair of vertex
tuples (left factor, right factor) to an integer coefficient.  The compiled
twin in ``_xi_fast.pyx`` implements the same interface; ``kernel.py`` selects
one at import time.

The recursion computes ξ(e_n ⊗ Δ^k) for the standard k-simplex:

    ξ(e₀ ⊗ −)      = the front-face ⊗ back-face coproduct,
    ξ(e_n ⊗ Δ^k)   = Φ(ξ(∂e_n ⊗ Δ^k)) + (−1)ⁿ Φ(ξ(e_n ⊗ ∂Δ^k)),
    ξ(T·A ⊗ x)     = T·ξ(A ⊗ x)                       (equivariance),
    ξ(e_i ⊗ Δ^j)   = 0 for i > j,

where Φ = φ_k⊗1 + (ι_k∘ε)⊗φ_k is assembled from the contracting cochain
φ_k([i₀..i_t]) = (−1)^{t+1}[i₀..i_t,k] (zero when i_t = k), and the value on
faces is obtained by order-preserving relabeling (naturality).  The bar
differential is ∂e₁ = T·e₀ − e₀ and ∂e_n = e_{n−1} + (−1)ⁿ T·e_{n−1} (n ≥ 2).
"""

from __future__ import annotations

IS_COMPILED = False

Entries = dict  # {(left_vertices, right_vertices): int}


def _add_into(acc: Entries, other: Entries, scalar: int) -> None:
    if scalar == 0:
        return
    for key, value in other.items():
        new = acc.get(key, 0) + scalar * value
        if new:
            acc[key] = new
        else:
            acc.pop(key, None)


def _twist(entries: Entries) -> Entries:
    out: Entries = {}
    for (a, b), value in entries.items():
        sign = -1 if ((len(a) - 1) * (len(b) - 1)) % 2 else 1
        key = (b, a)
        new = out.get(key, 0) + sign * value
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


def aw(vertices: tuple) -> Entries:
    """Front-face ⊗ back-face coproduct of a simplex given by its vertices."""
    out: Entries = {}
    for i in range(len(vertices)):
        key = (vertices[: i + 1], vertices[i:])
        out[key] = out.get(key, 0) + 1
    return out


def _phi(face: tuple, k: int):
    """φ_k: cone a face onto the top vertex; None when it already ends at k."""
    if face[-1] == k:
        return None
    sign = 1 if len(face) % 2 == 0 else -1  # (−1)^{t+1}, t = len(face)−1
    return face + (k,), sign


def _big_phi(entries: Entries, k: int) -> Entries:
    """Φ = φ_k⊗1 + (ι_k∘ε)⊗φ_k with the Koszul sign (second summand only
    meets degree-0 left factors, so no extra sign survives there)."""
    out: Entries = {}
    for (a, b), value in entries.items():
        coned = _phi(a, k)
        if coned is not None:
            face, sign = coned
            key = (face, b)
            new = out.get(key, 0) + sign * value
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        if len(a) == 1:  # ι_k ε only survives on degree-0 left factors
            coned_b = _phi(b, k)
            if coned_b is not None:
                face, sign = coned_b
                key = ((k,), face)
                new = out.get(key, 0) + sign * value
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
    return out


def _bar_coefficients(n: int):
    if n == 1:
        return (-1, 1)
    return (1, 1 if n % 2 == 0 else -1)


def pushforward(entries: Entries, vertices: tuple) -> Entries:
    """Relabel a standard-simplex value along i ↦ vertices[i]."""
    out: Entries = {}
    for (a, b), value in entries.items():
        key = (tuple(vertices[i] for i in a), tuple(vertices[i] for i in b))
        new = out.get(key, 0) + value
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


def xi_standard(n: int, k: int, cache: dict) -> Entries:
    """ξ(e_n ⊗ Δ^k) on the standard simplex, memoized in ``cache`` by (n, k)."""
    if n > k:
        return {}
    key = (n, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    simplex = tuple(range(k + 1))
    if n == 0:
        result = aw(simplex)
    else:
        plain, twisted = _bar_coefficients(n)
        lower = xi_standard(n - 1, k, cache)
        bar_part: Entries = {}
        _add_into(bar_part, lower, plain)
        _add_into(bar_part, _twist(lower), twisted)
        result = _big_phi(bar_part, k)
        face_part: Entries = {}
        sub = xi_standard(n, k - 1, cache)
        for i in range(k + 1):
            face = simplex[:i] + simplex[i + 1 :]
            sign = 1 if i % 2 == 0 else -1
            _add_into(face_part, pushforward(sub, face), sign)
        _add_into(result, _big_phi(face_part, k), 1 if n % 2 == 0 else -1)
        result = {key2: value for key2, value in result.items() if value}
    cache[key] = result
    return result


def xi_on_vertices(n: int, vertices: tuple, cache: dict) -> Entries:
    """ξ(e_n ⊗ σ) for a simplex with the given (weakly increasing) vertex list."""
    return pushforward(xi_standard(n, len(vertices) - 1, cache), vertices)
