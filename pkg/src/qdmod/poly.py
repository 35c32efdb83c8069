"""Sparse multivariate polynomials over Q with exact gcd.

Exponent vectors are tuples of fixed length; coefficients are Fractions.
Everything is immutable after construction and safe to share.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd


def grevlex_key(exps: tuple[int, ...]) -> tuple:
    """Sort key realizing graded reverse lexicographic order, ascending.

    With variables x1 > x2 > ... > xn (weight one each): higher total degree
    wins; on ties the monomial whose last nonzero entry of the difference is
    negative wins.
    """
    return (sum(exps), tuple(-e for e in reversed(exps)))


def exp_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def exp_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exp_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


class Poly:
    """Polynomial in ``nvars`` variables with Fraction coefficients."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: dict | None = None):
        self.nvars = nvars
        cleaned = {}
        if coeffs:
            for exps, c in coeffs.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c != 0:
                    cleaned[tuple(exps)] = c
        self.coeffs = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Poly":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.coeffs)

    def constant_value(self) -> Fraction:
        return self.coeffs.get((0,) * self.nvars, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            s = out.get(exps, Fraction(0)) + c
            if s == 0:
                out.pop(exps, None)
            else:
                out[exps] = s
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        out: dict = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                key = exp_mul(ea, eb)
                s = out.get(key, Fraction(0)) + ca * cb
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c: Fraction) -> "Poly":
        if c == 0:
            return Poly(self.nvars)
        return Poly(self.nvars, {e: k * c for e, k in self.coeffs.items()})

    def __pow__(self, n: int) -> "Poly":
        result = Poly.constant(self.nvars, 1)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def deriv_log(self, i: int) -> "Poly":
        """Logarithmic derivative q_i d/dq_i (exponents are preserved)."""
        return Poly(
            self.nvars, {e: c * e[i] for e, c in self.coeffs.items() if e[i]}
        )

    # -- order / degree ------------------------------------------------

    def leading_exps(self) -> tuple[int, ...]:
        return max(self.coeffs, key=grevlex_key)

    def leading_coeff(self) -> Fraction:
        return self.coeffs[self.leading_exps()]

    def total_degree(self) -> int:
        return max(sum(e) for e in self.coeffs) if self.coeffs else 0

    def weighted_degrees(self, weights: tuple[int, ...]) -> set[int]:
        return {sum(w * e for w, e in zip(weights, exps)) for exps in self.coeffs}

    def is_homogeneous(self, weights: tuple[int, ...]) -> bool:
        return len(self.weighted_degrees(weights)) <= 1

    # -- normalization --------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if not self.coeffs:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.coeffs.values():
            num = int_gcd(num, c.numerator)
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> tuple[Fraction, "Poly"]:
        """Split into content * primitive part with positive leading coefficient."""
        if not self.coeffs:
            return Fraction(1), self
        cont = self.content()
        if self.leading_coeff() < 0:
            cont = -cont
        return cont, self.scale(1 / cont)

    def __repr__(self):
        return f"Poly({self.nvars}, {self.coeffs!r})"


# -- exact division and gcd --------------------------------------------


def poly_div_exact(a: Poly, b: Poly) -> Poly | None:
    """Quotient a/b when division is exact, else None. Uses grevlex LT division."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q: dict = {}
    rem = a
    blt = b.leading_exps()
    blc = b.leading_coeff()
    while not rem.is_zero():
        rlt = rem.leading_exps()
        if not exp_divides(blt, rlt):
            return None
        exps = exp_sub(rlt, blt)
        coeff = rem.coeffs[rlt] / blc
        q[exps] = q.get(exps, Fraction(0)) + coeff
        rem = rem - Poly(a.nvars, {exps: coeff}) * b
    return Poly(a.nvars, q)


def _as_univariate(p: Poly, var: int) -> dict[int, Poly]:
    """View p as a univariate polynomial in ``var`` with Poly coefficients
    (in the same ambient variable set, with exponent 0 at ``var``)."""
    out: dict[int, dict] = {}
    for exps, c in p.coeffs.items():
        d = exps[var]
        rest = exps[:var] + (0,) + exps[var + 1 :]
        out.setdefault(d, {})[rest] = c
    return {d: Poly(p.nvars, cs) for d, cs in out.items()}


def _from_univariate(coeffs: dict[int, Poly], var: int, nvars: int) -> Poly:
    out: dict = {}
    for d, p in coeffs.items():
        for exps, c in p.coeffs.items():
            key = exps[:var] + (d,) + exps[var + 1 :]
            out[key] = c
    return Poly(nvars, out)


def _uni_degree(p: Poly, var: int) -> int:
    return max(e[var] for e in p.coeffs) if p.coeffs else -1


def _uni_lead(p: Poly, var: int) -> Poly:
    """Coefficient (a Poly without var) of the highest power of var."""
    d = _uni_degree(p, var)
    out = {}
    for exps, c in p.coeffs.items():
        if exps[var] == d:
            out[exps[:var] + (0,) + exps[var + 1 :]] = c
    return Poly(p.nvars, out)


def _pseudo_rem(a: Poly, b: Poly, var: int) -> Poly:
    """Pseudo-remainder of a by b viewed as univariates in var."""
    db = _uni_degree(b, var)
    lb = _uni_lead(b, var)
    rem = a
    xvar = Poly.variable(a.nvars, var)
    while not rem.is_zero() and _uni_degree(rem, var) >= db:
        dr = _uni_degree(rem, var)
        lr = _uni_lead(rem, var)
        rem = rem * lb - b * lr * xvar ** (dr - db)
    return rem


def _poly_content_in(p: Poly, var: int) -> Poly:
    """gcd of the univariate-in-var coefficients of p."""
    coeffs = list(_as_univariate(p, var).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        g = poly_gcd(g, c)
        if g.is_constant():
            break
    return g


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient (grevlex)."""
    if a.is_zero():
        return b.primitive()[1] if not b.is_zero() else Poly(a.nvars)
    if b.is_zero():
        return a.primitive()[1]
    if a.is_constant() or b.is_constant():
        return Poly.constant(a.nvars, 1)
    # pick the last variable actually occurring in either operand
    var = None
    for i in reversed(range(a.nvars)):
        if any(e[i] for e in a.coeffs) or any(e[i] for e in b.coeffs):
            var = i
            break
    if var is None:
        return Poly.constant(a.nvars, 1)
    if not any(e[var] for e in a.coeffs) or not any(e[var] for e in b.coeffs):
        # var occurs in only one operand: gcd divides the content wrt var
        if any(e[var] for e in a.coeffs):
            return poly_gcd(_poly_content_in(a, var), b)
        return poly_gcd(a, _poly_content_in(b, var))
    ca = _poly_content_in(a, var)
    cb = _poly_content_in(b, var)
    pa = poly_div_exact(a, ca)
    pb = poly_div_exact(b, cb)
    assert pa is not None and pb is not None
    # primitive PRS on the primitive parts
    f, g = pa, pb
    if _uni_degree(f, var) < _uni_degree(g, var):
        f, g = g, f
    while not g.is_zero():
        r = _pseudo_rem(f, g, var)
        if r.is_zero():
            f, g = g, r
            break
        r = poly_div_exact(r, _poly_content_in(r, var))
        assert r is not None
        f, g = g, r
    gc = poly_gcd(ca, cb)
    result = (f * gc).primitive()[1]
    return result
