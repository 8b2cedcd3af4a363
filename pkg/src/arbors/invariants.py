"""Recursive invariants of an arbor, computed from its children without enumerating points.

Each recursion combines W, the product of the children's invariant, with the
ways of filling the root block: ``r`` coordinates whose sum is bounded by
what the root inequality leaves after the children's height.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .algebra import (
    BiPoly,
    UniPoly,
    binom_poly,
    ibinom,
    lagrange_interpolate,
    rational_roots,
    sturm_roots_in,
)
from .arbor import Arbor
from .triangles import X, Y, diagonal, rational_subs

_cache: dict[tuple[str, str], object] = {}


def _memo(kind: str, t: Arbor, compute):
    key = (kind, t.encode())
    hit = _cache.get(key)
    if hit is None:
        hit = compute()
        _cache[key] = hit
    return hit


def clear_cache() -> None:
    _cache.clear()


# -- heights of lattice points in dilates --------------------------------


def _f_height_coeffs(t: Arbor, m: int) -> tuple[int, ...]:
    def compute():
        n, r = t.size, t.mult
        w = [1]
        for c in t.children:
            w = _convolve(w, _f_height_coeffs(c, m))
        out = [0] * (m * n + 1)
        # root block of r coordinates summing to l: C(r + l - 1, l) ways
        for b, wb in enumerate(w):
            if not wb:
                continue
            for ell in range(m * n - b + 1):
                out[b + ell] += comb(r + ell - 1, ell) * wb
        return tuple(out)

    return _memo(f"F{m}", t, compute)


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def f_height_poly(t: Arbor, m: int) -> UniPoly:
    """Lattice points of m*Q_t counted by height, as a polynomial in X."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return UniPoly([1], "X")
    return UniPoly(_f_height_coeffs(t, m), "X")


def ehrhart(t: Arbor) -> UniPoly:
    """Ehrhart polynomial in u, interpolated at u = 0..n."""

    def compute():
        pts = [(0, 1)] + [(m, sum(_f_height_coeffs(t, m))) for m in range(1, t.size + 1)]
        return lagrange_interpolate(pts, "u")

    return _memo("E", t, compute)


def ehrhart_root_check(t: Arbor) -> dict:
    """Are all roots of E_t real and in [-1, 0)? Are all coefficients positive?"""
    e = ehrhart(t)
    sf = e.squarefree()
    inside = sturm_roots_in(sf, Fraction(-1), Fraction(0), include_a=True, include_b=False)
    positive = all(c > 0 for c in e.coeffs)
    return {
        "arbor": t.encode(),
        "degree": e.degree,
        "distinct_roots": sf.degree,
        "distinct_roots_in_range": inside,
        "roots_ok": inside == sf.degree,
        "positive": positive,
        "passed": inside == sf.degree and positive,
    }


# -- refined Zeta ---------------------------------------------------------

_U = UniPoly.x("u")


def _zeta_rows(t: Arbor) -> tuple[UniPoly, ...]:
    """Coefficients (polynomials in u) of X^0..X^n of the refined Zeta polynomial."""

    def compute():
        n, r = t.size, t.mult
        w = [UniPoly([1], "u")]
        for c in t.children:
            w = _convolve_poly(w, _zeta_rows(c))
        a = (_U - 1) * r
        binoms = [binom_poly(a, ell) for ell in range(n + 1)]
        out = [UniPoly([], "u") for _ in range(n + 1)]
        for b, wb in enumerate(w):
            for ell in range(n - b + 1):
                out[b + ell] = out[b + ell] + binoms[ell] * wb
        return tuple(out)

    return _memo("Z", t, compute)


def _convolve_poly(a, b):
    out = [UniPoly([], "u") for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def zeta_refined(t: Arbor) -> BiPoly:
    """Refined Zeta polynomial, slot 0 = u, slot 1 = X."""
    terms = {}
    for j, p in enumerate(_zeta_rows(t)):
        for i, c in enumerate(p.coeffs):
            terms[(i, j)] = c
    return BiPoly(terms, ("u", "X"))


def zeta(t: Arbor) -> UniPoly:
    out = UniPoly([], "u")
    for p in _zeta_rows(t):
        out = out + p
    return out


# -- K polynomial and its descendants ------------------------------------


def k_poly(t: Arbor) -> BiPoly:
    """sum over P_t of X^{nz} Y^{ht}."""

    def compute():
        n, r = t.size, t.mult
        w = BiPoly.const(1)
        for c in t.children:
            w = w * k_poly(c)
        # root blocks with l nonzero entries summing to s: C(r, l) C(s - 1, s - l)
        root = {}
        for ell in range(r + 1):
            for s in range(ell, n + 1):
                root[(ell, s)] = comb(r, ell) * ibinom(s - 1, s - ell)
        out: dict = {}
        for (a, b), c in w.terms.items():
            for (ell, s), k in root.items():
                if b + s <= n and k:
                    key = (a + ell, b + s)
                    out[key] = out.get(key, 0) + c * k
        return BiPoly(out)

    return _memo("K", t, compute)


def _expand(k: BiPoly, image) -> BiPoly:
    """Linear map on monomials: X^j Y^k -> image(j, k), images cached per key."""
    cache: dict = {}
    out: dict = {}
    for (j, kk), c in k.terms.items():
        img = cache.get((j, kk))
        if img is None:
            img = cache[(j, kk)] = image(j, kk)
        for key, v in img.terms.items():
            out[key] = out.get(key, 0) + c * v
    return BiPoly(out)


def _powers(base: BiPoly, top: int) -> list[BiPoly]:
    out = [BiPoly.const(1)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def m_triangle(t: Arbor) -> BiPoly:
    """M-triangle from K: X^j Y^k -> (X - 1)^j X^(k - j) Y^k."""

    def compute():
        n = t.size
        xm1 = _powers(X - 1, n)

        def image(j, k):
            if k < j:
                raise ArithmeticError(f"K term X^{j}Y^{k} would leave a negative power of X")
            return BiPoly({(a + k - j, b + k): c for (a, b), c in xm1[j].terms.items()})

        return _expand(k_poly(t), image)

    return _memo("M", t, compute)


def transmuted_m_triangle(t: Arbor) -> BiPoly:
    """Transmuted M-triangle from K: X^j Y^k -> (Y (X - 1))^j (1 - Y)^(k - j)."""

    def compute():
        n = t.size
        yx = _powers(Y * (X - 1), n)
        one_y = _powers(1 - Y, n)
        return _expand(k_poly(t), lambda j, k: yx[j] * one_y[k - j])

    return _memo("Mbar", t, compute)


def f_vector(t: Arbor) -> UniPoly:
    """K(1 + X, 1)."""
    out = UniPoly([], "X")
    one_x = UniPoly([1, 1], "X")
    for (j, _k), c in k_poly(t).terms.items():
        out = out + one_x ** j * c
    return out


def h_vector(t: Arbor) -> UniPoly:
    """K(X, 1)."""
    coeffs: dict[int, Fraction] = {}
    for (j, _k), c in k_poly(t).terms.items():
        coeffs[j] = coeffs.get(j, 0) + c
    return UniPoly([coeffs.get(j, 0) for j in range(max(coeffs) + 1)], "X")


def h_from_m_triangle(m: BiPoly) -> UniPoly:
    """M(1/(1 - X), 1 - X) as a polynomial in X."""
    p = rational_subs(m, (Y ** 0, 1 - X), (1 - X, Y ** 0))
    if any(j for (_i, j) in p.terms):
        raise ArithmeticError("unexpected Y in result")
    return diagonal(BiPoly({(i, i): c for (i, _j), c in p.terms.items()}))


def num_elements(t: Arbor) -> int:
    return sum(_f_height_coeffs(t, 1))


def zeta_factorization(t: Arbor) -> dict:
    """How much of Zeta splits into rational linear factors (evidence only)."""
    z = zeta(t)
    roots = rational_roots(z)
    linear = sum(roots.values())
    return {
        "arbor": t.encode(),
        "degree": z.degree,
        "rational_roots": {str(k): v for k, v in roots.items()},
        "linear_factors": linear,
        "splits": linear == z.degree,
        "squarefree_degree": z.squarefree().degree,
    }
