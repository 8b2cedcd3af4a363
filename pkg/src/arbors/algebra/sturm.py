"""Exact real-root counting with Sturm chains over Q."""

from __future__ import annotations

from fractions import Fraction

from .poly import Scalar, UniPoly


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    """Chain of the squarefree part, so repeated roots at an endpoint count correctly."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    if p.degree > 0:
        p = p.squarefree()
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations(chain: list[UniPoly], x: Fraction) -> int:
    signs = [v for v in (q(x) for q in chain) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def sturm_roots_in(
    p: UniPoly,
    a: Scalar,
    b: Scalar,
    include_a: bool = True,
    include_b: bool = True,
) -> int:
    """Number of distinct real roots of ``p`` in the interval between a and b.

    The endpoint flags choose open/closed ends. Uses V(a) - V(b) = #roots in (a, b].
    """
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise ValueError("empty interval")
    chain = sturm_chain(p)
    if a == b:
        return int(include_a and include_b and p(a) == 0)
    count = _variations(chain, a) - _variations(chain, b)
    if include_a and p(a) == 0:
        count += 1
    if not include_b and p(b) == 0:
        count -= 1
    return count


def distinct_real_roots(p: UniPoly) -> int:
    """Total number of distinct real roots, via a Cauchy bound."""
    bound = 1 + max((abs(Fraction(c) / p.lead()) for c in p.coeffs[:-1]), default=Fraction(0))
    return sturm_roots_in(p, -bound, bound)
