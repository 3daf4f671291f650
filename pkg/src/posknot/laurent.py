"""Exact sparse Laurent polynomials over the integers.

Two variables are supported. ``Var.A`` is the Kauffman bracket variable with
integer exponents. ``Var.T`` is the Jones variable; its exponents are stored
in quarter units, so ``t^(5/2)`` is the exponent ``10``. With ``A = t^(-1/4)``
an A-exponent maps to a t-quarter exponent by negation, and nothing ever
needs a fraction.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from typing import Iterable, Mapping


class Var(enum.Enum):
    A = "A"
    T = "t"


class LaurentError(ValueError):
    pass


class VariableMismatch(LaurentError):
    pass


class ZeroPolynomialError(LaurentError):
    pass


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_var", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: Var = Var.T):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e]}
        self._var = var
        self._hash = None

    @classmethod
    def constant(cls, c: int, var: Var = Var.T) -> LaurentPoly:
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: Var = Var.T) -> LaurentPoly:
        return cls({exponent: coeff}, var)

    @property
    def var(self) -> Var:
        return self._var

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: LaurentPoly) -> None:
        if self._var is not other._var:
            raise VariableMismatch(f"cannot combine polynomials in {self._var.value} and {other._var.value}")

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._var)
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return lp_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self._var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return lp_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return lp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise LaurentError("negative powers are only defined for monomials; use lp_invert_var")
        result = LaurentPoly.constant(1, self._var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == LaurentPoly.constant(other, self._var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._var is other._var and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._var, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r}, var={self._var.name})"

    def __str__(self) -> str:
        return format_poly(self)


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._check(q)
    acc = dict(p._terms)
    for e, c in q._terms.items():
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly(acc, p.var)


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._check(q)
    acc: dict[int, int] = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
    return LaurentPoly(acc, p.var)


def lp_degrees(p: LaurentPoly) -> tuple[int, int]:
    """Lowest and highest exponent, in the polynomial's native units."""
    if p.is_zero():
        raise ZeroPolynomialError("degrees of the zero polynomial are undefined")
    exps = list(p._terms)
    return exps[0], exps[-1]


def t_degrees(p: LaurentPoly) -> tuple[Fraction, Fraction]:
    """Lowest and highest t-degree of a Jones-variable polynomial."""
    if p.var is not Var.T:
        raise VariableMismatch("t-degrees need a polynomial in t")
    lo, hi = lp_degrees(p)
    return Fraction(lo, 4), Fraction(hi, 4)


def lp_invert_var(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({-e: c for e, c in p._terms.items()}, p.var)


def bracket_to_jones(bracket: LaurentPoly, writhe: int, n_components: int) -> LaurentPoly:
    """Normalize a Kauffman bracket to the Jones polynomial.

    ``V = (-A^3)^(-w) <D>`` with ``A = t^(-1/4)``. The monomial
    ``A^e`` becomes ``(-1)^w A^(e - 3w)``, i.e. t-quarter exponent ``3w - e``.
    """
    if bracket.var is not Var.A:
        raise VariableMismatch("bracket must be a polynomial in A")
    sign = -1 if writhe % 2 else 1
    jones = LaurentPoly({3 * writhe - e: sign * c for e, c in bracket.items()}, Var.T)
    want = (2 * (n_components - 1)) % 4
    bad = [e for e in jones._terms if e % 4 != want]
    if bad:
        raise AssertionError(
            f"Jones exponents {bad} (quarter units) break the {n_components}-component congruence; "
            "smoothing convention is inconsistent"
        )
    return jones


# -- text format -------------------------------------------------------------

def _format_exponent(e: int, var: Var) -> str:
    if var is Var.A:
        return str(e)
    q = Fraction(e, 4)
    if q.denominator == 1:
        return str(q.numerator)
    return f"({q.numerator}/{q.denominator})"


def format_poly(p: LaurentPoly) -> str:
    """Render with ascending exponents, e.g. ``-t^-4 + t^-3 + t^-1``."""
    if p.is_zero():
        return "0"
    name = p.var.value
    parts = []
    for e, c in p._terms.items():
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            exp = _format_exponent(e, p.var)
            mono = name if exp == "1" else f"{name}^{exp}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coef>\d+)?\s*\*?\s*
        (?:(?P<var>[At])
           (?:\s*\^\s*(?:\(\s*(?P<pexp>[+-]?\s*\d+(?:\s*/\s*\d+)?)\s*\)
                         |\{\s*(?P<bexp>[+-]?\s*\d+(?:\s*/\s*\d+)?)\s*\}
                         |(?P<exp>[+-]?\d+)))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str, var: Var = Var.T) -> LaurentPoly:
    """Parse the textual format produced by :func:`format_poly`.

    Also accepts ``*`` between coefficient and variable and exponents in
    ``^(..)`` or ``^{..}`` form, as found in knot tables and LaTeX.
    """
    s = text.strip()
    if s in ("", "0"):
        return LaurentPoly((), var)
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise LaurentError(f"cannot parse polynomial at position {pos}: {text!r}")
        sign, coef, name = m.group("sign"), m.group("coef"), m.group("var")
        if sign is None and not first:
            raise LaurentError(f"missing operator at position {pos}: {text!r}")
        if coef is None and name is None:
            raise LaurentError(f"empty term at position {pos}: {text!r}")
        if name is not None and name != var.value:
            raise VariableMismatch(f"expected variable {var.value}, found {name}")
        raw = m.group("pexp") or m.group("bexp") or m.group("exp")
        if name is None:
            exp = Fraction(0)
        elif raw is None:
            exp = Fraction(1)
        else:
            exp = Fraction(raw.replace(" ", ""))
        if var is Var.T:
            q = exp * 4
            if q.denominator != 1:
                raise LaurentError(f"exponent {exp} is not a multiple of 1/4")
            e = int(q)
        else:
            if exp.denominator != 1:
                raise LaurentError(f"bracket exponents must be integers, got {exp}")
            e = int(exp)
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(terms, var)
