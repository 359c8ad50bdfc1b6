"""Recovering all derivatives of ``F(e^x)`` from finitely many.

If ``F(t)`` is supported on the exponents ``e_0 < ... < e_K`` then
``f(x) = F(e^x) = sum a_i e^(e_i x)`` and the derivatives at 0 satisfy
``d_j = sum_i a_i e_i^j``.  The first ``K + 1`` of them fix the amplitudes
through a Vandermonde system, and every later ``d_j`` is a fixed linear
combination of those.  Two independent routes are provided: amplitudes via
Lagrange interpolation (:func:`vandermonde_solve`, :func:`extrapolate`) and
the linear functional as the remainder of ``x^j`` modulo the characteristic
polynomial ``prod (x - e_i)`` of the window (:func:`linear_functional`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .diagram import Diagram, diagram_stats
from .errors import NotAKnot, SizeMismatch
from .polyring import LaurentPoly, format_coef
from .vassiliev import derivatives, family_polynomial, taylor_coeffs
from .windows import Window, dubrovnik_window, homfly_window, jones_window


def _check_size(window: Window, data: Sequence) -> None:
    if len(data) != len(window.exponents):
        raise SizeMismatch(
            f"{len(data)} data values for a window of {len(window.exponents)} exponents")


def _poly_mul_linear(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    """Multiply ``sum coeffs[k] x^k`` by ``(x - root)``."""
    out = [Fraction(0)] * (len(coeffs) + 1)
    for k, c in enumerate(coeffs):
        out[k + 1] += c
        out[k] -= root * c
    return out


def _char_poly(exps: Sequence[Fraction]) -> list[Fraction]:
    chi = [Fraction(1)]
    for e in exps:
        chi = _poly_mul_linear(chi, e)
    return chi


def _lagrange_rows(exps: Sequence[Fraction]) -> list[list[Fraction]]:
    """Row ``i`` holds the monomial coefficients of the ``i``-th Lagrange basis polynomial."""
    chi = _char_poly(exps)
    rows = []
    for i, ei in enumerate(exps):
        # chi / (x - e_i) by synthetic division
        quot = [Fraction(0)] * (len(chi) - 1)
        carry = Fraction(0)
        for k in range(len(chi) - 1, 0, -1):
            carry = chi[k] + carry * ei
            quot[k - 1] = carry
        denom = Fraction(1)
        for m, em in enumerate(exps):
            if m != i:
                denom *= ei - em
        rows.append([c / denom for c in quot])
    return rows


def vandermonde_solve(window: Window, data: Sequence) -> list[Fraction]:
    """Amplitudes ``a_i`` with ``sum_i a_i e_i^j = data[j]`` for ``j = 0..K``."""
    _check_size(window, data)
    data = [Fraction(v) for v in data]
    rows = _lagrange_rows(window.t_exponents)
    return [sum((r * v for r, v in zip(row, data)), Fraction(0)) for row in rows]


def extrapolate(window: Window, data: Sequence, j: int) -> Fraction:
    """``d_j`` predicted from ``d_0..d_K``; returns ``data[j]`` for ``j <= K``."""
    amps = vandermonde_solve(window, data)
    return sum((a * e ** j for a, e in zip(amps, window.t_exponents)), Fraction(0))


@dataclass(frozen=True)
class LinearFunctional:
    window: Window
    j: int
    coefficients: tuple[Fraction, ...]

    def __call__(self, data: Sequence) -> Fraction:
        _check_size(self.window, data)
        return sum((c * Fraction(v) for c, v in zip(self.coefficients, data)), Fraction(0))


def linear_functional(window: Window, j: int) -> LinearFunctional:
    """Coefficients expressing ``d_j`` through ``d_0..d_K``.

    Every solution ``f`` of the window's constant-coefficient ODE is killed by
    ``chi(d/dx)`` with ``chi(x) = prod (x - e_i)``, so ``d_j`` equals the same
    combination of lower derivatives as ``x^j mod chi``.
    """
    if j < 0:
        raise ValueError("order must be nonnegative")
    chi = _char_poly(window.t_exponents)
    deg = len(chi) - 1
    # x^j mod chi, built by repeated multiplication by x
    rem = [Fraction(0)] * deg
    if j < deg:
        rem[j] = Fraction(1)
    else:
        rem[deg - 1] = Fraction(1)
        for _ in range(j - deg + 1):
            top = rem[-1]
            rem = [Fraction(0)] + rem[:-1]
            if top:
                rem = [r - top * chi[k] for k, r in enumerate(rem)]
    return LinearFunctional(window, j, tuple(rem))


def reconstruct_polynomial(window: Window, data: Sequence) -> LaurentPoly:
    """The Laurent polynomial ``sum a_i t^(e_i)``, written in ``q``."""
    amps = vandermonde_solve(window, data)
    return LaurentPoly({k: a for k, a in zip(window.exponents, amps)}, "q")


# ---------------------------------------------------------------------------
# theorem verification


@dataclass
class DeterminationReport:
    diagram: str
    family: str
    a: Fraction | None
    window: str
    N: int
    data_points: int
    max_order: int
    flags: dict[int, bool]
    coarse_ok: bool | None
    fine_ok: bool | None
    determined: bool
    divided_by: int = 0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "diagram": self.diagram,
            "family": self.family,
            "a": None if self.a is None else format_coef(self.a),
            "window": self.window,
            "N": self.N if isinstance(self.N, int) else format_coef(self.N),
            "data_points": self.data_points,
            "max_order": self.max_order,
            "flags": {str(k): v for k, v in sorted(self.flags.items())},
            "coarse_ok": self.coarse_ok,
            "fine_ok": self.fine_ok,
            "determined": self.determined,
            "divided_by": self.divided_by,
            **self.extra,
        }


def _check_orders(window: Window, derivs: Sequence[Fraction], max_order: int) -> dict[int, bool]:
    K = window.K
    amps = vandermonde_solve(window, derivs[:K + 1])
    exps = window.t_exponents
    flags = {}
    for j in range(K + 1, max_order + 1):
        pred = sum((a * e ** j for a, e in zip(amps, exps)), Fraction(0))
        flags[j] = pred == derivs[j]
    return flags


def _loop_factor_series(power: int, n: int) -> list[Fraction]:
    return taylor_coeffs(LaurentPoly({1: 1, -1: 1}) ** power, n)


def _check_jones_divided(window: Window, F: LaurentPoly, max_order: int, divided: int):
    """Jones route for disconnected projections.

    ``V = (t^(1/2) + t^(-1/2))^(g-1) Q`` and the series of the factor is
    invertible, so ``V``'s first coefficients fix ``Q``'s, the window of ``Q``
    extrapolates those, and multiplying back predicts ``V``.
    """
    K = window.K
    top = max(max_order, K)
    v = taylor_coeffs(F, top)
    h = _loop_factor_series(divided, top)
    q_coef: list[Fraction] = []
    for n in range(K + 1):
        acc = v[n] - sum((h[k] * q_coef[n - k] for k in range(1, n + 1)), Fraction(0))
        q_coef.append(acc / h[0])
    q_derivs = [c * factorial(j) for j, c in enumerate(q_coef)]
    amps = vandermonde_solve(window, q_derivs)
    exps = window.t_exponents
    for j in range(K + 1, top + 1):
        d = sum((a * e ** j for a, e in zip(amps, exps)), Fraction(0))
        q_coef.append(d / factorial(j))
    flags = {}
    for n in range(K + 1, max_order + 1):
        pred = sum((h[k] * q_coef[n - k] for k in range(n + 1)), Fraction(0))
        flags[n] = pred == v[n]
    return flags


def theorem_window(d: Diagram, family: str, a=None) -> Window:
    if family == "jones":
        return jones_window(d, tighten=True)
    if family == "homfly":
        return homfly_window(d, a)
    if family == "dubrovnik":
        return dubrovnik_window(d, a, target="Y")
    raise ValueError(f"unknown family {family!r}")


def verify_determination(d: Diagram, family: str, a=None, jmax: int | None = None,
                         name: str = "", lattice: str = "auto") -> DeterminationReport:
    """Check that the theorem window predicts every order up to ``jmax`` exactly.

    With ``lattice="auto"`` the coarse lattice is tried and the fine one is
    run as well, so both outcomes are recorded; the report uses coarse when
    it suffices.  ``"coarse"`` or ``"fine"`` pins a single lattice.  At least
    ``jmax - N`` orders past the consumed data are always checked, so a
    large fine window never makes the check vacuous.
    """
    if lattice not in ("auto", "coarse", "fine"):
        raise ValueError("lattice must be auto, coarse or fine")
    F = family_polynomial(d, family, a)
    window = theorem_window(d, family, a)
    N = window.N
    if jmax is None:
        jmax = N + 10
    extra_orders = max(1, jmax - N)
    divided = window.info.get("divided_by", 0)

    def run(w: Window):
        max_order = max(jmax, w.K + extra_orders)
        if divided:
            return max_order, _check_jones_divided(w, F, max_order, divided)
        return max_order, _check_orders(w, derivatives(F, max_order), max_order)

    results = {}
    for lat in (("coarse", "fine") if lattice == "auto" else (lattice,)):
        w = window.on(lat)
        results[lat] = (w,) + run(w)
    coarse_ok = all(results["coarse"][2].values()) if "coarse" in results else None
    fine_ok = all(results["fine"][2].values()) if "fine" in results else None
    used = "coarse" if coarse_ok else ("fine" if "fine" in results else "coarse")
    used_w, max_order, flags = results[used]
    extra = {
        "window_bounds_t": [format_coef(b) for b in used_w.t_bounds()],
        "contains_support": used_w.contains(F) if not divided else None,
    }
    if "loose_N" in window.info:
        extra["loose_N"] = format_coef(window.info["loose_N"])
    if "target" in window.info:
        extra["target"] = window.info["target"]
    return DeterminationReport(
        diagram=name,
        family=family,
        a=None if a is None else Fraction(a),
        window=used,
        N=N,
        data_points=len(used_w.exponents),
        max_order=max_order,
        flags=flags,
        coarse_ok=coarse_ok,
        fine_ok=fine_ok,
        determined=all(flags.values()),
        divided_by=divided,
        extra=extra,
    )


def jones_triviality_check(d: Diagram) -> bool:
    """True iff ``v_1 = ... = v_c = 0`` for a knot diagram with ``c`` crossings.

    A true answer is cross-checked against the Jones polynomial itself.
    """
    st = diagram_stats(d)
    if st.link_components != 1:
        raise NotAKnot(f"diagram has {st.link_components} components")
    F = family_polynomial(d, "jones")
    v = taylor_coeffs(F, st.c)
    trivial = all(x == 0 for x in v[1:])
    if trivial and F != 1:
        raise AssertionError(f"vanishing invariants up to {st.c} but Jones is {F}")
    return trivial
