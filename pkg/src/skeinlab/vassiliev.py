"""Taylor coefficients of link polynomials under ``t = e^x``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .diagram import Diagram
from .polyring import LaurentPoly, tv_specialize
from .skein import dubrovnik, homfly, jones

FAMILIES = ("jones", "homfly", "dubrovnik")


@dataclass(frozen=True)
class InvariantSequence:
    family: str
    a: Fraction | None
    values: tuple[Fraction, ...] = field(default=())

    def derivatives(self) -> list[Fraction]:
        return [v * factorial(j) for j, v in enumerate(self.values)]


def derivatives(F: LaurentPoly, n: int) -> list[Fraction]:
    """``d^j/dx^j F(e^x)`` at 0 for ``j = 0..n``; ``F`` in ``q = e^(x/2)``."""
    if F.var != "q":
        raise ValueError("expected a polynomial in q")
    out = []
    terms = [(Fraction(k, 2), Fraction(c)) for k, c in F.items()]
    powers = [(Fraction(1), c) for _, c in terms]
    for _ in range(n + 1):
        out.append(sum((p * c for p, c in powers), Fraction(0)))
        powers = [(p * e, c) for (p, c), (e, _) in zip(powers, terms)]
    return out


def taylor_coeffs(F: LaurentPoly, n: int) -> list[Fraction]:
    """``v_j = (1/j!) sum_k c_k (k/2)^j`` for ``j = 0..n``."""
    return [d / factorial(j) for j, d in enumerate(derivatives(F, n))]


def family_polynomial(d: Diagram, family: str, a=None) -> LaurentPoly:
    """The one-variable polynomial whose expansion defines the family."""
    if family == "jones":
        if a is not None:
            raise ValueError("the jones family takes no a")
        return jones(d)
    if a is None:
        raise ValueError(f"the {family} family needs a half-integer a")
    if family == "homfly":
        return tv_specialize(homfly(d), a)
    if family == "dubrovnik":
        return tv_specialize(dubrovnik(d)[1], a)
    raise ValueError(f"unknown family {family!r}")


def invariant_family(d: Diagram, family: str, a=None, n: int = 0) -> InvariantSequence:
    F = family_polynomial(d, family, a)
    return InvariantSequence(family, None if a is None else Fraction(a),
                             tuple(taylor_coeffs(F, n)))
