"""Two-variable triangle calculus: transmutation and the F/M/H conversion maps.

Every map is a rational substitution followed by multiplication with a
clearing factor. We substitute over a common denominator and divide
exactly, so a result that is not a polynomial raises ``ArithmeticError``.
"""

from __future__ import annotations

from .algebra import BiPoly

X, Y = BiPoly.gens()
ONE = BiPoly.const(1)


def rational_subs(p: BiPoly, a: tuple[BiPoly, BiPoly], b: tuple[BiPoly, BiPoly], factor: BiPoly = ONE) -> BiPoly:
    """p(a0/a1, b0/b1) * factor, required to be a polynomial in X, Y."""
    if p.is_zero():
        return BiPoly({}, ("X", "Y"))
    da, db = p.degrees()
    an, ad = a
    bn, bd = b
    pow_an = [ONE]
    pow_ad = [ONE]
    pow_bn = [ONE]
    pow_bd = [ONE]
    for _ in range(da):
        pow_an.append(pow_an[-1] * an)
        pow_ad.append(pow_ad[-1] * ad)
    for _ in range(db):
        pow_bn.append(pow_bn[-1] * bn)
        pow_bd.append(pow_bd[-1] * bd)
    num = BiPoly({})
    for (i, j), c in p.terms.items():
        num = num + pow_an[i] * pow_ad[da - i] * pow_bn[j] * pow_bd[db - j] * c
    den = pow_ad[da] * pow_bd[db]
    try:
        return (num * factor).exact_div(den)
    except ArithmeticError:
        raise ArithmeticError("substitution does not clear to a polynomial") from None


def transmute(m: BiPoly) -> BiPoly:
    """M(X, Y) -> M((1 - Y)/(1 - XY), 1 - XY); an involution on triangles."""
    if any(i > j for i, j in m.terms):
        return rational_subs(m, (1 - Y, 1 - X * Y), (1 - X * Y, ONE))
    # X^a Y^b with a <= b maps to (1 - Y)^a (1 - XY)^(b - a): no division needed
    da, db = m.degrees()
    pa = [ONE]
    for _ in range(da):
        pa.append(pa[-1] * (1 - Y))
    pb = [ONE]
    for _ in range(db):
        pb.append(pb[-1] * (1 - X * Y))
    out: dict = {}
    for (i, j), c in m.terms.items():
        for key, v in (pa[i] * pb[j - i]).terms.items():
            out[key] = out.get(key, 0) + c * v
    return BiPoly(out)


def f_from_m(m: BiPoly, n: int) -> BiPoly:
    return rational_subs(m, (Y, Y - X), (Y - X, 1 + Y), (1 + Y) ** n)


def m_from_f(f: BiPoly, n: int) -> BiPoly:
    return rational_subs(f, (Y * (X - 1), 1 - X * Y), (X * Y, 1 - X * Y), (1 - X * Y) ** n)


def m_from_h(h: BiPoly, n: int) -> BiPoly:
    return rational_subs(h, ((X - 1) * Y, 1 - Y), (X, X - 1), (1 - Y) ** n)


def h_from_m(m: BiPoly, n: int) -> BiPoly:
    return rational_subs(m, (Y, Y - 1), ((Y - 1) * X, 1 + (Y - 1) * X), (1 + (Y - 1) * X) ** n)


def dual(m: BiPoly, n: int) -> BiPoly:
    """M(1/Y, 1/X) (XY)^n, the triangle of the dual poset."""
    out = {}
    for (a, b), c in m.terms.items():
        if a > n or b > n:
            raise ArithmeticError("monomial exceeds the size parameter")
        out[(n - b, n - a)] = c
    return BiPoly(out)


def diagonal(m: BiPoly, var: str = "X"):
    """sum_k [X^k Y^k] m * X^k."""
    from .algebra import UniPoly

    deg = max((i for i, j in m.terms if i == j), default=-1)
    return UniPoly([m.coeff(k, k) for k in range(deg + 1)], var)


def to_display(m: BiPoly, n: int) -> list[list]:
    """Rows Y^n down to Y^0, each listing X^0, X^1, ... up to the last nonzero entry.

    The constant term ends up bottom left, as triangles are usually drawn.
    """
    rows = []
    for k in range(n, -1, -1):
        row = [m.coeff(j, k) for j in range(n + 1)]
        while row and row[-1] == 0:
            row.pop()
        rows.append(row)
    return rows


def from_display(rows: list[list], vars=("X", "Y")) -> BiPoly:
    """Inverse of ``to_display``: first row is the top power of Y."""
    n = len(rows) - 1
    return BiPoly({(j, n - k): c for k, row in enumerate(rows) for j, c in enumerate(row) if c}, vars)
