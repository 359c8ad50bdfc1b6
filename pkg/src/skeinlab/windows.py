"""Degree windows for specialized link polynomials.

A window is a finite, increasing list of candidate exponents (stored on the
integer ``q``-lattice, ``q = t^(1/2)``) that must contain the support of a
polynomial, together with the theorem-specific count ``N``.  For the HOMFLY
and Dubrovnik specializations two lattices are carried: ``coarse`` steps by
one power of ``t`` from the lower bound and ``fine`` steps by ``t^(1/2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .diagram import Diagram, all_a_loops, all_b_loops, diagram_stats
from .errors import ZeroPolynomial
from .polyring import LaurentPoly, TwoVarLaurent, _half_integer_twice


@dataclass(frozen=True)
class Window:
    exponents: tuple[int, ...]
    N: int
    source: str
    lower: int | None = None
    upper: int | None = None
    lattice_coarse: tuple[int, ...] = ()
    lattice_fine: tuple[int, ...] = ()
    a: Fraction | None = None
    info: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        exps = tuple(self.exponents)
        if not exps:
            raise ValueError("a window needs at least one exponent")
        if any(b <= a for a, b in zip(exps, exps[1:])):
            raise ValueError("window exponents must be strictly increasing")
        object.__setattr__(self, "exponents", exps)

    @property
    def t_exponents(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(k, 2) for k in self.exponents)

    @property
    def K(self) -> int:
        """Index of the last datum the window consumes."""
        return len(self.exponents) - 1

    def on(self, lattice: str) -> "Window":
        """The same window restricted to the ``coarse`` or ``fine`` lattice."""
        exps = {"coarse": self.lattice_coarse, "fine": self.lattice_fine}[lattice]
        if not exps:
            raise ValueError(f"no {lattice} lattice on a {self.source} window")
        return replace(self, exponents=exps)

    def contains(self, F: LaurentPoly) -> bool:
        if F.is_zero():
            return True
        return set(F.support()[2]) <= set(self.exponents)

    def t_bounds(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.lower, 2), Fraction(self.upper, 2)


def _lattices(lo: int, hi: int, parity: int | None = None):
    """Coarse and fine lattices on ``[lo, hi]`` (``q``-exponents).

    The coarse lattice steps by ``t`` through the residue class ``parity``
    mod 2, or from ``lo`` when no class is predicted.
    """
    fine = tuple(range(lo, hi + 1))
    if parity is None:
        parity = lo % 2
    return tuple(k for k in fine if k % 2 == parity), fine


def jones_window(d: Diagram, tighten: bool = False) -> Window:
    """Window for the Jones polynomial from bracket-state degree bounds.

    ``max deg_A <d> <= c + 2(|s_A| - 1)`` and ``min deg_A >= -c - 2(|s_B| - 1)``
    hold for any diagram, connected or not; the writhe normalization and
    ``q = A^-2`` turn them into ``q``-bounds.  With ``tighten`` the window is
    that of ``V / (q + q^-1)^(g-1)`` instead, whose ``t``-span is at most ``c``.
    """
    st = diagram_stats(d)
    s_a, s_b = all_a_loops(d), all_b_loops(d)
    lo = (3 * st.w - st.c - 2 * s_a + 2) // 2
    hi = (3 * st.w + st.c + 2 * s_b - 2) // 2
    parity = (st.link_components - 1) % 2
    divided = 0
    if tighten and st.g > 1:
        divided = st.g - 1
        lo, hi = lo + divided, hi - divided
        parity = (parity + divided) % 2
    fine = tuple(range(lo, hi + 1))
    coarse = tuple(k for k in fine if k % 2 == parity)
    return Window(coarse, st.c, "theorem1", lo, hi, coarse, fine, None,
                  {"s_A": s_a, "s_B": s_b, "divided_by": divided,
                   "murasugi_components": st.murasugi_components})


def morton_bounds(d: Diagram) -> tuple[int, int, int]:
    """``(c - s + 1, w - s + 1, w + s - 1)``: caps on z-degree and alpha-range."""
    st = diagram_stats(d)
    return st.c - st.s + 1, st.w - st.s + 1, st.w + st.s - 1


def check_morton(P: TwoVarLaurent, d: Diagram) -> dict[str, bool]:
    zmax, amin, amax = morton_bounds(d)
    deg = P.degrees()
    return {
        "z_max": deg["z_max"] <= zmax,
        "alpha_min": amin <= deg["alpha_min"],
        "alpha_max": deg["alpha_max"] <= amax,
    }


def homfly_window(d: Diagram, a) -> Window:
    """``N = (2a - 1)(s - 1) + c`` and ``t``-bounds ``a w -+ N/2``.

    ``P`` only has terms ``alpha^i z^j`` with ``i = j = mu - 1`` mod 2 for a
    ``mu``-component link, so after specializing every ``q``-exponent has
    parity ``(2a + 1)(mu - 1)``; the coarse lattice uses that class.
    """
    two_a = _half_integer_twice(a)
    st = diagram_stats(d)
    n = max(0, (two_a - 1) * (st.s - 1) + st.c)
    lo, hi = two_a * st.w - n, two_a * st.w + n
    coarse, fine = _lattices(lo, hi, (two_a + 1) * (st.link_components - 1) % 2)
    exps = coarse if (two_a % 2 == 0 or st.link_components == 1) else fine
    return Window(exps, n, "theorem2", lo, hi, coarse, fine, Fraction(two_a, 2))


def dubrovnik_window(d: Diagram, a, target: str = "D") -> Window:
    """Window from the Dubrovnik state-sum estimates.

    The ``D`` window is ``[-a c_- - X, a c_+ + X]`` in ``t`` with
    ``X = c/2 + (a - 1/2)(c + g - 1)``; ``target="Y"`` shifts it by ``-a w``
    for ``Y = alpha^-w D``.  ``N`` is the greatest integer below ``3ac``,
    clamped at 0.  Terms ``alpha^i z^j`` of ``D`` and ``Y`` have ``i + j``
    even, so for odd ``2a`` the specialization sits on integer powers of
    ``t``; for even ``2a`` no class is predicted and the coarse lattice
    starts at the lower bound.
    """
    if target not in ("D", "Y"):
        raise ValueError("target must be 'D' or 'Y'")
    two_a = _half_integer_twice(a)
    st = diagram_stats(d)
    x2 = st.c + (two_a - 1) * (st.c + st.g - 1)
    lo, hi = -two_a * st.c_minus - x2, two_a * st.c_plus + x2
    if target == "Y":
        lo, hi = lo - two_a * st.w, hi - two_a * st.w
    three_ac = Fraction(3 * two_a * st.c, 2)
    n = max(0, math.ceil(three_ac) - 1)
    predicted = 0 if two_a % 2 else None
    coarse, fine = _lattices(lo, hi, predicted)
    exps = coarse if predicted is not None else fine
    loose = three_ac + Fraction((two_a - 1) * (st.g - 1), 2)
    return Window(exps, n, "theorem3", lo, hi, coarse, fine, Fraction(two_a, 2),
                  {"target": target, "loose_N": loose})


def support_window(F: LaurentPoly) -> Window:
    if F.is_zero():
        raise ZeroPolynomial("support window of the zero polynomial")
    lo, hi, exps = F.support()
    span = Fraction(hi - lo, 2)
    n = span.numerator if span.denominator == 1 else span
    return Window(exps, n, "support", lo, hi, (), tuple(range(lo, hi + 1)))
