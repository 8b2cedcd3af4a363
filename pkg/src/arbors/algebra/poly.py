"""Dense univariate and sparse bivariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, gcd
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def _q(c) -> Scalar:
    """Normalize an exact scalar: integral values are kept as int, which is much faster."""
    if isinstance(c, int) and not isinstance(c, bool):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"not an exact scalar: {c!r}")


def qdiv(a: Scalar, b: Scalar) -> Scalar:
    """Exact quotient, never a float."""
    return _q(Fraction(a) / b)


def _is_scalar(c) -> bool:
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


def gbinom(a: Scalar, k: int) -> Fraction:
    """Generalized binomial a(a-1)...(a-k+1)/k! for any rational a."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(k):
        num *= a - i
    return num / factorial(k)


def ibinom(n: int, k: int) -> int:
    """Binomial with the usual combinatorial conventions, n possibly negative."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k) if k <= n else 0
    # (-1)^k C(k-n-1, k)
    return (-1) ** k * comb(k - n - 1, k)


class UniPoly:
    """Polynomial in one variable, coefficient list indexed by exponent."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "u"):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    @classmethod
    def const(cls, c: Scalar, var: str = "u") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def x(cls, var: str = "u") -> "UniPoly":
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1, var: str = "u") -> "UniPoly":
        return cls([0] * k + [c], var)

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1, var: str = "u") -> "UniPoly":
        p = cls.const(lead, var)
        for r in roots:
            p = p * cls([-_q(r), 1], var)
        return p

    # -- basic queries --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # -- ring operations ------------------------------------------------

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if _is_scalar(other):
            return UniPoly([other], self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = _q(other)
            return UniPoly([a * c for a in self.coeffs], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            c = _q(other)
            return UniPoly([qdiv(a, c) for a in self.coeffs], self.var)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly([1], self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if _is_scalar(other):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly([], self.var), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = qdiv(rem[k + len(other.coeffs) - 1], lead)
            quo[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return UniPoly(quo, self.var), UniPoly(rem[: len(other.coeffs) - 1], self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- evaluation and calculus ----------------------------------------

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar or any polynomial."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0) if _is_scalar(x) else x * 0
        if not _is_scalar(x) and _is_scalar(acc):
            return x * 0 + acc
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        return self(inner)

    def shift(self, a: Scalar) -> "UniPoly":
        """p(u + a)."""
        return self(UniPoly([a, 1], self.var))

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def integral(self) -> "UniPoly":
        return UniPoly([0] + [qdiv(c, i + 1) for i, c in enumerate(self.coeffs)], self.var)

    def monic(self) -> "UniPoly":
        return self / self.lead()

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree(self) -> "UniPoly":
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return self.exact_div(g).monic()

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    # -- conversion -----------------------------------------------------

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "UniPoly":
        return cls([Fraction(n, d) for n, d in data["coeffs"]], data.get("var", "u"))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if mono and abs(c) == 1:
                s = ("-" if c < 0 else "+") + mono
            else:
                s = ("-" if c < 0 else "+") + str(abs(c)) + ("*" + mono if mono else "")
            parts.append(s)
        out = " ".join(parts)
        return out[1:] if out.startswith("+") else out


Key = tuple[int, int]


class BiPoly:
    """Polynomial in two variables stored as a sparse map (i, j) -> coefficient.

    ``vars`` only names the roles of the two slots (X,Y or u,X or E,V);
    arithmetic ignores it.
    """

    __slots__ = ("terms", "vars")

    def __init__(self, terms: Mapping[Key, Scalar] | None = None, vars: tuple[str, str] = ("X", "Y")):
        self.terms: dict[Key, Fraction] = {}
        if terms:
            for k, c in terms.items():
                c = _q(c)
                if c:
                    self.terms[(int(k[0]), int(k[1]))] = c
        self.vars = tuple(vars)

    @classmethod
    def const(cls, c: Scalar, vars=("X", "Y")) -> "BiPoly":
        return cls({(0, 0): c}, vars)

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1, vars=("X", "Y")) -> "BiPoly":
        return cls({(i, j): c}, vars)

    @classmethod
    def gens(cls, vars=("X", "Y")) -> tuple["BiPoly", "BiPoly"]:
        return cls({(1, 0): 1}, vars), cls({(0, 1): 1}, vars)

    @classmethod
    def from_uni(cls, p: UniPoly, axis: int = 0, vars=("X", "Y")) -> "BiPoly":
        if axis == 0:
            return cls({(k, 0): c for k, c in enumerate(p.coeffs)}, vars)
        return cls({(0, k): c for k, c in enumerate(p.coeffs)}, vars)

    @classmethod
    def from_matrix(cls, rows, vars=("X", "Y")) -> "BiPoly":
        """Entry ``rows[i][j]`` is the coefficient of A^i B^j."""
        return cls({(i, j): c for i, row in enumerate(rows) for j, c in enumerate(row) if c}, vars)

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def degrees(self) -> tuple[int, int]:
        if not self.terms:
            return (-1, -1)
        return (max(k[0] for k in self.terms), max(k[1] for k in self.terms))

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def slice(self, axis: int, power: int, var: str | None = None) -> UniPoly:
        """Coefficient of (first var)^power [axis=0] as a polynomial in the other."""
        if axis == 0:
            d = {j: c for (i, j), c in self.terms.items() if i == power}
            var = var or self.vars[1]
        else:
            d = {i: c for (i, j), c in self.terms.items() if j == power}
            var = var or self.vars[0]
        if not d:
            return UniPoly([], var)
        return UniPoly([d.get(k, 0) for k in range(max(d) + 1)], var)

    def to_matrix(self) -> list[list[Fraction]]:
        da, db = self.degrees()
        return [[self.coeff(i, j) for j in range(db + 1)] for i in range(da + 1)]

    def with_vars(self, vars: tuple[str, str]) -> "BiPoly":
        return BiPoly(self.terms, vars)

    # -- ring operations ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if _is_scalar(other):
            return BiPoly({(0, 0): other}, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = _q(other)
            return BiPoly({k: v * c for k, v in self.terms.items()}, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[Key, Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + a * b
        return BiPoly(out, self.vars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            c = _q(other)
            return BiPoly({k: qdiv(v, c) for k, v in self.terms.items()}, self.vars)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = BiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if _is_scalar(other):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution ---------------------------------------------------

    def subs(self, a, b):
        """Evaluate with first slot := a, second slot := b.

        ``a`` and ``b`` may be scalars or polynomials (BiPoly/UniPoly) of a
        common type; powers are cached.
        """
        da, db = self.degrees()
        if da < 0:
            return Fraction(0)
        pa = [1]
        for _ in range(da):
            pa.append(pa[-1] * a)
        pb = [1]
        for _ in range(db):
            pb.append(pb[-1] * b)
        acc = 0
        for (i, j), c in self.terms.items():
            acc = acc + pa[i] * pb[j] * c
        return acc

    __call__ = subs

    def swap(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()}, self.vars[::-1])

    def exact_div(self, g: "BiPoly") -> "BiPoly":
        """Exact division in Q[A,B] (lex order, A > B); raises if g does not divide."""
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        glead = max(g.terms)
        gc = g.terms[glead]
        rem = dict(self.terms)
        quo: dict[Key, Fraction] = {}
        while rem:
            lead = max(rem)
            di, dj = lead[0] - glead[0], lead[1] - glead[1]
            if di < 0 or dj < 0:
                raise ArithmeticError("inexact bivariate division")
            c = qdiv(rem[lead], gc)
            quo[(di, dj)] = quo.get((di, dj), 0) + c
            for (i, j), v in g.terms.items():
                k = (i + di, j + dj)
                nv = rem.get(k, 0) - c * v
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        return BiPoly(quo, self.vars)

    # -- conversion -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [[i, j, c.numerator, c.denominator] for (i, j), c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "BiPoly":
        return cls({(i, j): Fraction(n, d) for i, j, n, d in data["terms"]}, tuple(data.get("vars", ("X", "Y"))))

    def __repr__(self):
        if not self.terms:
            return "0"
        a, b = self.vars
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), kv[0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else (a if i == 1 else f"{a}^{i}"),
                    "" if j == 0 else (b if j == 1 else f"{b}^{j}"),
                ) if s
            )
            if mono and abs(c) == 1:
                s = ("-" if c < 0 else "+") + mono
            else:
                s = ("-" if c < 0 else "+") + str(abs(c)) + ("*" + mono if mono else "")
            parts.append(s)
        out = " ".join(parts)
        return out[1:] if out.startswith("+") else out


def binom_poly(a: UniPoly, ell: int) -> UniPoly:
    """binom(a + ell - 1, ell) as a polynomial, i.e. prod_{i=1}^{ell} (a + i - 1) / ell!."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    out = UniPoly([1], a.var)
    for i in range(1, ell + 1):
        out = out * (a + (i - 1))
    return out / factorial(ell)


def lagrange_interpolate(points: Iterable[tuple[Scalar, Scalar]], var: str = "u") -> UniPoly:
    """Unique polynomial of degree < len(points) through the given nodes (Newton form)."""
    pts = [(_q(x), _q(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae")
    # divided differences
    table = [y for _, y in pts]
    n = len(pts)
    coefs = [table[0]] if n else []
    for level in range(1, n):
        table = [qdiv(table[i + 1] - table[i], xs[i + level] - xs[i]) for i in range(n - level)]
        coefs.append(table[0])
    out = UniPoly([], var)
    basis = UniPoly([1], var)
    for k, c in enumerate(coefs):
        out = out + basis * c
        basis = basis * UniPoly([-xs[k], 1], var)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _int_root(ints: list[int], a: int, q: int) -> bool:
    """Is a/q a root of sum ints[i] x^i? Homogeneous Horner over the integers."""
    acc = 0
    qpow = 1
    for c in reversed(ints):
        acc = acc * a + c * qpow
        qpow *= q
    return acc == 0


def rational_roots(p: UniPoly) -> dict[Fraction, int]:
    """Rational roots of p with multiplicities (rational root test on the integer form)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    out: dict[Fraction, int] = {}
    k = 0
    while p[k] == 0:
        k += 1
    if k:
        out[Fraction(0)] = k
        p = UniPoly(p.coeffs[k:], p.var)
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    for q in _divisors(ints[-1]):
        for a in _divisors(ints[0]):
            if gcd(a, q) != 1:
                continue
            for sa in (a, -a):
                if len(ints) < 2 or not _int_root(ints, sa, q):
                    continue
                cand = Fraction(sa, q)
                mult = 0
                lin = UniPoly([-cand, 1], p.var)
                while p.degree > 0 and p(cand) == 0:
                    p = p.exact_div(lin)
                    mult += 1
                out[cand] = mult
                den = 1
                for c in p.coeffs:
                    den = den * c.denominator // gcd(den, c.denominator)
                ints = [int(c * den) for c in p.coeffs]
    return dict(sorted(out.items()))
