"""Exact Laurent polynomials over the rationals.

Two value types live here:

* :class:`LaurentPoly` -- one variable, integer exponents.  The variable is
  either ``q`` (with ``q = t^(1/2)``) or the bracket variable ``A``.
* :class:`TwoVarLaurent` -- the HOMFLY/Dubrovnik ring in ``alpha`` and ``z``.

Coefficients are kept as ``int`` whenever they are integral and as
:class:`fractions.Fraction` otherwise, so skein computations (which only
ever see integers) stay on the fast integer path.  Nothing in this module
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import NotDivisible, NotLaurent, VariableMismatch, ZeroPolynomial

Coef = Union[int, Fraction]

VARIABLES = ("q", "A")


def _norm(c) -> Coef:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def format_coef(c: Coef) -> str:
    """Render a rational as ``p`` or ``p/r``."""
    c = _norm(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def parse_coef(text: str) -> Coef:
    return _norm(Fraction(text.strip()))


class LaurentPoly:
    """Immutable Laurent polynomial ``sum c_k v^k`` in one variable ``v``."""

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, Coef] | None = None, var: str = "q"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable {var!r}")
        clean = {}
        for k, c in (terms or {}).items():
            c = _norm(c)
            if c:
                clean[int(k)] = c
        self._terms = clean
        self.var = var
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, exp: int, coef: Coef = 1, var: str = "q") -> "LaurentPoly":
        return cls({exp: coef}, var)

    @classmethod
    def constant(cls, c: Coef, var: str = "q") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def zero(cls, var: str = "q") -> "LaurentPoly":
        return cls({}, var)

    @classmethod
    def parse(cls, text: str, var: str = "q") -> "LaurentPoly":
        """Inverse of :meth:`__str__`."""
        text = text.strip()
        if text == "0":
            return cls.zero(var)
        terms: dict[int, Coef] = {}
        for chunk in text.split(" + "):
            coef, _, power = chunk.partition(f"*{var}^")
            if not power:
                raise ValueError(f"bad term {chunk!r}")
            k = int(power)
            terms[k] = terms.get(k, 0) + parse_coef(coef)
        return cls(terms, var)

    # -- accessors ----------------------------------------------------
    @property
    def terms(self) -> dict[int, Coef]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, k: int) -> Coef:
        return self._terms.get(k, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> tuple[int, int, tuple[int, ...]]:
        """``(min exponent, max exponent, sorted exponents)``."""
        if not self._terms:
            raise ZeroPolynomial("support of the zero polynomial")
        exps = tuple(sorted(self._terms))
        return exps[0], exps[-1], exps

    def span(self) -> int:
        lo, hi, _ = self.support()
        return hi - lo

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise VariableMismatch(f"{self.var} vs {other.var}")
            return other
        if isinstance(other, Rational):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Coef] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise NotLaurent("only monomials have Laurent inverses")
            (k, c), = self._terms.items()
            return LaurentPoly({k * n: Fraction(1, 1) / Fraction(c) ** -n}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()}, self.var)

    def scale_exponents(self, factor: int) -> "LaurentPoly":
        """Substitute ``v -> v^factor`` (``factor = -1`` is the mirror map)."""
        return LaurentPoly({e * factor: c for e, c in self._terms.items()}, self.var)

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return ``Q`` with ``self == Q * other`` or raise :class:`NotDivisible`."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.var)
        b_lo, b_hi, _ = other.support()
        b_lead = Fraction(other._terms[b_hi])
        rem = dict(self._terms)
        quot: dict[int, Coef] = {}
        lo = min(rem)
        # long division from the top; the quotient must stop at lo - b_lo
        while rem:
            top = max(rem)
            k = top - b_hi
            if k < lo - b_lo:
                raise NotDivisible(f"{self} is not divisible by {other}")
            c = _norm(Fraction(rem[top]) / b_lead)
            quot[k] = c
            for e, bc in other._terms.items():
                v = rem.get(e + k, 0) - c * bc
                if v:
                    rem[e + k] = v
                else:
                    rem.pop(e + k, None)
        return LaurentPoly(quot, self.var)

    def evaluate(self, value) -> Fraction:
        """Exact value at a nonzero rational point."""
        value = Fraction(value)
        return sum((Fraction(c) * value ** k for k, c in self._terms.items()), Fraction(0))

    # -- value semantics ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.var == other.var and self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == ({0: _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            f"{format_coef(self._terms[k])}*{self.var}^{k}"
            for k in sorted(self._terms, reverse=True)
        )

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    """Dispatch form of ring arithmetic; ``op`` is ``add``, ``sub`` or ``mul``."""
    if a.var != b.var:
        raise VariableMismatch(f"{a.var} vs {b.var}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def lp_divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a.divide_exact(b)


def lp_support(a: LaurentPoly) -> tuple[int, int, tuple[int, ...]]:
    return a.support()


Q = LaurentPoly.monomial(1)
ONE_Q = LaurentPoly.constant(1)
#: ``z`` after the substitution ``z -> t^(1/2) - t^(-1/2)``
Z_SPECIAL = LaurentPoly({1: 1, -1: -1})


class TwoVarLaurent:
    """Immutable Laurent polynomial in ``alpha`` and ``z``.

    Keys are ``(alpha exponent, z exponent)``; negative ``z`` exponents are
    allowed (loop values carry ``z^-1``).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Coef] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = _norm(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, i: int, j: int, coef: Coef = 1) -> "TwoVarLaurent":
        return cls({(i, j): coef})

    @classmethod
    def constant(cls, c: Coef) -> "TwoVarLaurent":
        return cls({(0, 0): c})

    @classmethod
    def parse(cls, text: str) -> "TwoVarLaurent":
        text = text.strip()
        if text == "0":
            return cls()
        terms: dict[tuple[int, int], Coef] = {}
        for chunk in text.split(" + "):
            coef, rest = chunk.split("*a^", 1)
            i, j = rest.split("*z^", 1)
            key = (int(i), int(j))
            terms[key] = terms.get(key, 0) + parse_coef(coef)
        return cls(terms)

    @property
    def terms(self) -> dict[tuple[int, int], Coef]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> dict[str, int]:
        """Extreme exponents: ``alpha_min``, ``alpha_max``, ``z_min``, ``z_max``."""
        if not self._terms:
            raise ZeroPolynomial("degrees of the zero polynomial")
        alphas = [i for i, _ in self._terms]
        zs = [j for _, j in self._terms]
        return {"alpha_min": min(alphas), "alpha_max": max(alphas),
                "z_min": min(zs), "z_max": max(zs)}

    def _coerce(self, other):
        if isinstance(other, TwoVarLaurent):
            return other
        if isinstance(other, Rational):
            return TwoVarLaurent.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return TwoVarLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return TwoVarLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Coef] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return TwoVarLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = TwoVarLaurent.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_alpha(self, k: int) -> "TwoVarLaurent":
        """Multiply by ``alpha^k``."""
        return TwoVarLaurent({(i + k, j): c for (i, j), c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, TwoVarLaurent):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == ({(0, 0): _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            f"{format_coef(self._terms[k])}*a^{k[0]}*z^{k[1]}"
            for k in sorted(self._terms, reverse=True)
        )

    def __repr__(self):
        return f"TwoVarLaurent({str(self)!r})"


ALPHA = TwoVarLaurent.monomial(1, 0)
ALPHA_INV = TwoVarLaurent.monomial(-1, 0)
Z = TwoVarLaurent.monomial(0, 1)


def _half_integer_twice(a) -> int:
    two_a = Fraction(a) * 2
    if two_a.denominator != 1 or two_a < 0:
        raise ValueError(f"a must be a nonnegative half-integer, got {a}")
    return int(two_a)


def tv_specialize(p: TwoVarLaurent, a) -> LaurentPoly:
    """Substitute ``alpha -> t^a`` and ``z -> t^(1/2) - t^(-1/2)``; result in ``q``.

    Negative powers of ``z`` are cleared by exact division by
    ``(q - q^-1)^k``; if that fails the input was not a link polynomial.
    """
    two_a = _half_integer_twice(a)
    if p.is_zero():
        return LaurentPoly.zero()
    zmin = min(j for _, j in p._terms)
    lift = max(0, -zmin)
    # group by z exponent so each power of (q - 1/q) is built once
    by_z: dict[int, dict[int, Coef]] = {}
    for (i, j), c in p._terms.items():
        row = by_z.setdefault(j + lift, {})
        e = two_a * i
        row[e] = row.get(e, 0) + c
    numerator = LaurentPoly.zero()
    for j, row in by_z.items():
        numerator = numerator + LaurentPoly(row) * Z_SPECIAL ** j
    if not lift:
        return numerator
    try:
        return numerator.divide_exact(Z_SPECIAL ** lift)
    except NotDivisible as exc:
        raise NotLaurent(f"{p} does not specialize to a Laurent polynomial at a={a}") from exc


def poly_sum(polys: Iterable[LaurentPoly], var: str = "q") -> LaurentPoly:
    out = LaurentPoly.zero(var)
    for p in polys:
        out = out + p
    return out
