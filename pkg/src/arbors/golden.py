"""Published reference values, each bound to the computation that should reproduce it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .algebra import BiPoly, UniPoly
from .arbor import hochschild, parse_arbor, reverse_linear, type_a
from .families.nc import nc_m_triangle
from .invariants import (
    ehrhart,
    f_vector,
    h_vector,
    m_triangle,
    num_elements,
    zeta,
    zeta_refined,
)
from .poset import build_poset, cubical_f_vector, maximal_chain_count
from .polytope import vertices
from .triangles import f_from_m, from_display, transmute
from .volume import laplace_poly, volume, volume_function

u = UniPoly.x("u")
x = UniPoly.x("X")
h = UniPoly.x("h")

RUNNING = "(2 (2) (1) (1))"
LINEAR_PAIR = "(2 (2 (1 (1))))"
UNARY_BINARY = "(1 (1) (1 (1)))"


def _p(coeffs_high_first, var="u") -> UniPoly:
    return UniPoly(list(reversed(coeffs_high_first)), var)


def running_refined_zeta() -> BiPoly:
    rows = [
        90,
        540 * (u - 1),
        90 * (17 * u - 15) * (u - 1),
        60 * (11 * u - 10) * (4 * u - 3) * (u - 1),
        45 * _p([68, -156, 119, -30]) * (u - 1),
        6 * _p([53, -77, 30]) * (4 * u - 3) * (2 * u - 1) * (u - 1),
        _p([802, -1839, 1598, -621, 90]) * (2 * u - 1) * (u - 1),
    ]
    terms = {}
    for j, row in enumerate(rows):
        row = UniPoly([row], "u") if isinstance(row, int) else row
        for i, c in enumerate(row.coeffs):
            terms[(i, j)] = Fraction(c) / 90
    return BiPoly(terms, ("u", "X"))


def running_laplace() -> BiPoly:
    E, V = BiPoly.gens(("E", "V"))
    return (
        -(V**6) * E**4 + 2 * V**6 * E**3 - 2 * V**5 * E**4 + 4 * V**5 * E**3
        - 2 * V**2 * E**6 - 2 * V**6 * E - 2 * V**5 * E**2
        - Fraction(22, 3) * V * E**6 + V**6
    )


RUNNING_M_DISPLAY = [
    [1, -18, 113, -334, 506, -380, 112],
    [-6, 58, -208, 352, -284, 88],
    [15, -92, 201, -188, 64],
    [-20, 78, -98, 40],
    [15, -34, 19],
    [-6, 6],
    [1],
]
TYPE_A3_M_DISPLAY = [[-1, 6, -10, 5], [3, -8, 5], [-3, 3], [1]]
TYPE_A3_MBAR_DISPLAY = [[-5, 10, -6, 1], [10, -16, 6], [-6, 6], [1]]
UNARY_BINARY_F_DISPLAY = [[1], [4, 4], [6, 14, 8], [4, 17, 23, 10], [1, 8, 22, 25, 10]]


@dataclass
class GoldenCase:
    name: str
    compute: Callable[[], Any]
    expected: Callable[[], Any]

    def run(self) -> dict:
        got = self.compute()
        want = self.expected()
        ok = got == want
        out = {"case": self.name, "passed": bool(ok)}
        if not ok:
            out["expected"] = repr(want)
            out["computed"] = repr(got)
        return out


def _t(enc):
    return parse_arbor(enc)


def cases() -> list[GoldenCase]:
    run = lambda: _t(RUNNING)  # noqa: E731
    pair = lambda: _t(LINEAR_PAIR)  # noqa: E731
    rev = lambda: reverse_linear(_t(LINEAR_PAIR))  # noqa: E731
    return [
        GoldenCase("running: elements", lambda: num_elements(run()), lambda: 330),
        GoldenCase("running: poset size", lambda: len(build_poset(run())), lambda: 330),
        GoldenCase("running: cubical f-vector", lambda: cubical_f_vector(build_poset(run())),
                   lambda: _p([1, 24, 186, 654, 1152, 990, 330], "X")),
        GoldenCase("running: f-vector from K", lambda: f_vector(run()),
                   lambda: _p([1, 24, 186, 654, 1152, 990, 330], "X")),
        GoldenCase("running: h-vector", lambda: h_vector(run()), lambda: _p([1, 18, 81, 130, 81, 18, 1], "X")),
        GoldenCase("running: vertex count", lambda: len(vertices(run())), lambda: 36),
        GoldenCase("running: Ehrhart", lambda: ehrhart(run()),
                   lambda: (2 * u + 1) * (u + 1) ** 3 * _p([83, 70, 12]) / 12),
        GoldenCase("running: volume", lambda: volume(run()), lambda: Fraction(83, 6)),
        GoldenCase("running: Zeta", lambda: zeta(run()),
                   lambda: u * (2 * u - 1) * _p([802, -1369, 893, -266, 30]) / 90),
        GoldenCase("running: refined Zeta", lambda: zeta_refined(run()), running_refined_zeta),
        GoldenCase("running: M-triangle", lambda: m_triangle(run()), lambda: from_display(RUNNING_M_DISPLAY)),
        GoldenCase("running: Laplace polynomial", lambda: laplace_poly(run()), running_laplace),
        GoldenCase("running: volume function on [0,1]", lambda: volume_function(run()).pieces[0],
                   lambda: h**5 / 120),
        GoldenCase("running: volume function on [4,6]", lambda: volume_function(run()).pieces[4:],
                   lambda: (2 * h - Fraction(14, 3),) * 2),
        GoldenCase("pair: elements", lambda: (num_elements(pair()), num_elements(rev())), lambda: (501, 501)),
        GoldenCase("pair: E_t", lambda: ehrhart(pair()),
                   lambda: (u + 1) * _p([20167, 57230, 62225, 32170, 7848, 720]) / 720),
        GoldenCase("pair: Z_t", lambda: zeta(pair()),
                   lambda: u * (2 * u - 1) * _p([898, -1611, 1002, -249, 20]) / 60),
        GoldenCase("pair: E_Rev", lambda: ehrhart(rev()),
                   lambda: (u + 1) * (2 * u + 1) * _p([898, 1981, 1557, 514, 60]) / 60),
        GoldenCase("pair: Z_Rev", lambda: zeta(rev()),
                   lambda: u * _p([20167, -43605, 34975, -12795, 2098, -120]) / 720),
        GoldenCase("pair: maximal chains", lambda: (maximal_chain_count(build_poset(pair())),
                                                    maximal_chain_count(build_poset(rev()))),
                   lambda: (21552, 20167)),
        GoldenCase("pair: volumes", lambda: (volume(pair()), volume(rev())),
                   lambda: (Fraction(20167, 720), Fraction(21552, 720))),
        GoldenCase("pair: h-vectors", lambda: (h_vector(pair()), h_vector(rev())),
                   lambda: (_p([1, 23, 122, 209, 122, 23, 1], "X"),) * 2),
        GoldenCase("type A3: elements", lambda: num_elements(type_a(3)), lambda: 14),
        GoldenCase("type A3: M-triangle", lambda: m_triangle(type_a(3)), lambda: from_display(TYPE_A3_M_DISPLAY)),
        GoldenCase("type A3: transmuted", lambda: transmute(m_triangle(type_a(3))),
                   lambda: from_display(TYPE_A3_MBAR_DISPLAY)),
        GoldenCase("type A3: noncrossing partner", lambda: nc_m_triangle("A", 3),
                   lambda: from_display(TYPE_A3_MBAR_DISPLAY)),
        GoldenCase("unary-binary: elements", lambda: num_elements(_t(UNARY_BINARY)), lambda: 33),
        GoldenCase("unary-binary: F-triangle", lambda: f_from_m(transmute(m_triangle(_t(UNARY_BINARY))), 4),
                   lambda: from_display(UNARY_BINARY_F_DISPLAY)),
        GoldenCase("single vertex: Laplace", lambda: laplace_poly(_t("(1)")),
                   lambda: BiPoly({(0, 1): 1, (1, 1): -1}, ("E", "V"))),
        GoldenCase("hochschild 4: elements", lambda: num_elements(hochschild(4)), lambda: 28),
    ]


def golden_suite() -> dict:
    rows = [c.run() for c in cases()]
    return {"check": "golden", "rows": rows, "passed": all(r["passed"] for r in rows)}
