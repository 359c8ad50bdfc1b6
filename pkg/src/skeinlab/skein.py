"""Polynomial engines: Kauffman bracket/Jones, HOMFLY and Dubrovnik.

Jones comes from the bracket state sum.  HOMFLY and Dubrovnik recurse down
a skein tree: simplify, stop at a descending (layered unlink) diagram,
otherwise switch and smooth the first crossing met from below.  Subresults
are memoized on :func:`~skeinlab.diagram.canonical_key`.

Conventions
-----------
HOMFLY: ``alpha^-1 P(K+) - alpha P(K-) = z P(K0)`` with ``P(unknot) = 1``;
the 2-component unlink is ``(alpha^-1 - alpha)/z``.  At ``alpha = t``,
``z = t^(1/2) - t^(-1/2)`` this is the Jones skein relation.

Dubrovnik: ``D(K+) - D(K-) = z (D(K=) - D(K)())`` where ``K=`` is the
oriented smoothing, ``D`` of a positive curl is ``alpha D``, the loop value
is ``mu = (alpha - alpha^-1)/z + 1`` and ``Y = alpha^-w D``.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from typing import MutableMapping

from .diagram import (A_JOINS, B_JOINS, DISORIENTED, ORIENTED, Diagram,
                      canonical_key, first_nondescending, simplify,
                      smooth_crossing, switch_crossing, trace_components)
from .errors import DiagramTooLarge
from .polyring import ALPHA, ALPHA_INV, Z, LaurentPoly, TwoVarLaurent

DEFAULT_CAPS = {"bracket": 16, "homfly": 14, "dubrovnik": 12}

HOMFLY_LOOP = TwoVarLaurent({(-1, -1): 1, (1, -1): -1})
DUBROVNIK_LOOP = TwoVarLaurent({(1, -1): 1, (-1, -1): -1, (0, 0): 1})
BRACKET_LOOP = LaurentPoly({2: -1, -2: -1}, "A")


def cap_for(engine: str, cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("SKEINLAB_CAP")
    if env:
        return int(env)
    return DEFAULT_CAPS[engine]


def _guard(d: Diagram, engine: str, cap: int | None) -> None:
    limit = cap_for(engine, cap)
    if d.c > limit:
        raise DiagramTooLarge(f"{engine}: {d.c} crossings exceeds cap {limit}")


def link_components(d: Diagram) -> int:
    return len(trace_components(d)) + d.free_loops


@dataclass
class SkeinState:
    """A leaf of the skein tree: a layered unlink reached from the root."""

    diagram: Diagram
    n_sigma: int
    w_sigma: int
    l_sigma: int


# ---------------------------------------------------------------------------
# bracket and Jones


def kauffman_bracket(d: Diagram, cap: int | None = None) -> LaurentPoly:
    """State sum ``sum A^(#A - #B) (-A^2 - A^-2)^(loops - 1)``; unknot is 1."""
    _guard(d, "bracket", cap)
    labels = sorted(d.labels())
    index = {lab: k for k, lab in enumerate(labels)}
    pairs = []
    for x in d.crossings:
        a = [(index[x.arcs[p]], index[x.arcs[r]]) for p, r in A_JOINS]
        b = [(index[x.arcs[p]], index[x.arcs[r]]) for p, r in B_JOINS]
        pairs.append((a, b))
    n = len(labels)
    counts: dict[tuple[int, int], int] = {}
    for state in range(1 << d.c):
        parent = list(range(n))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        comps = n
        n_a = 0
        for k, (a, b) in enumerate(pairs):
            if state >> k & 1:
                joins = b
            else:
                joins = a
                n_a += 1
            for u, v in joins:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        key = (2 * n_a - d.c, comps + d.free_loops)
        counts[key] = counts.get(key, 0) + 1
    total = LaurentPoly.zero("A")
    powers: dict[int, LaurentPoly] = {}
    for (exp, loops), m in counts.items():
        if loops - 1 not in powers:
            powers[loops - 1] = BRACKET_LOOP ** (loops - 1)
        total = total + powers[loops - 1].shift(exp) * m
    return total


def bracket_to_q(p: LaurentPoly) -> LaurentPoly:
    """Rewrite an ``A`` polynomial in ``q = A^-2``."""
    out = {}
    for k, c in p.items():
        if k % 2:
            raise ValueError(f"odd A-exponent {k} has no q form")
        out[-k // 2] = c
    return LaurentPoly(out, "q")


def jones(d: Diagram, cap: int | None = None) -> LaurentPoly:
    """Jones polynomial in ``q = t^(1/2)``: ``(-A^3)^-w <d>`` with ``q = A^-2``."""
    w = d.writhe
    norm = LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1, "A")
    return bracket_to_q(norm * kauffman_bracket(d, cap))


# ---------------------------------------------------------------------------
# skein recursion


class _Recursion:
    """Shared driver; subclasses supply the skein step and the leaf value."""

    engine = ""

    def __init__(self, cache: MutableMapping | None, use_cache: bool = True):
        self.cache = cache if cache is not None else {}
        self.use_cache = use_cache

    def run(self, d: Diagram) -> TwoVarLaurent:
        limit = sys.getrecursionlimit()
        need = 50 + 4 * d.c * (d.c + 2)
        if need > limit:
            sys.setrecursionlimit(need)
        return self.value(d)

    def value(self, d: Diagram) -> TwoVarLaurent:
        d, kinks = simplify(d)
        factor = self.kink_factor(kinks)
        if self.use_cache:
            key = canonical_key(d)
            hit = self.cache.get(key)
            if hit is None:
                hit = self.evaluate(d)
                self.cache[key] = hit
        else:
            hit = self.evaluate(d)
        return hit if factor is None else hit.shift_alpha(factor)

    def kink_factor(self, kinks):
        return None

    def evaluate(self, d: Diagram) -> TwoVarLaurent:
        i = first_nondescending(d)
        if i is None:
            return self.leaf(d)
        return self.step(d, i)


class _Homfly(_Recursion):
    engine = "homfly"

    def leaf(self, d):
        return HOMFLY_LOOP ** (link_components(d) - 1)

    def step(self, d, i):
        switched = self.value(switch_crossing(d, i))
        smoothed = self.value(smooth_crossing(d, i, ORIENTED))
        if d.crossings[i].sign > 0:
            # P+ = alpha^2 P- + alpha z P0
            return switched.shift_alpha(2) + (smoothed * Z).shift_alpha(1)
        # P- = alpha^-2 P+ - alpha^-1 z P0
        return switched.shift_alpha(-2) - (smoothed * Z).shift_alpha(-1)


class _Dubrovnik(_Recursion):
    engine = "dubrovnik"

    def kink_factor(self, kinks):
        return sum(kinks) if kinks else None

    def leaf(self, d):
        # layered unlinks have zero linking, so the writhe is pure framing
        return (DUBROVNIK_LOOP ** (link_components(d) - 1)).shift_alpha(d.writhe)

    def step(self, d, i):
        switched = self.value(switch_crossing(d, i))
        diff = Z * (self.value(smooth_crossing(d, i, ORIENTED))
                    - self.value(smooth_crossing(d, i, DISORIENTED)))
        if d.crossings[i].sign > 0:
            return switched + diff
        return switched - diff


_HOMFLY_CACHE: dict = {}
_DUBROVNIK_CACHE: dict = {}


def clear_caches() -> None:
    _HOMFLY_CACHE.clear()
    _DUBROVNIK_CACHE.clear()


def homfly(d: Diagram, cap: int | None = None, cache: MutableMapping | None = None,
           use_cache: bool = True) -> TwoVarLaurent:
    """HOMFLY polynomial ``P(alpha, z)`` of an oriented diagram."""
    _guard(d, "homfly", cap)
    return _Homfly(_HOMFLY_CACHE if cache is None else cache, use_cache).run(d)


def dubrovnik(d: Diagram, cap: int | None = None, cache: MutableMapping | None = None,
              use_cache: bool = True) -> tuple[TwoVarLaurent, TwoVarLaurent]:
    """``(D, Y)``: the regular-isotopy polynomial and ``Y = alpha^-w D``."""
    _guard(d, "dubrovnik", cap)
    big_d = _Dubrovnik(_DUBROVNIK_CACHE if cache is None else cache, use_cache).run(d)
    return big_d, big_d.shift_alpha(-d.writhe)


def skein_leaves(d: Diagram, engine: str = "homfly") -> list[SkeinState]:
    """Enumerate the descending leaves of the (unmemoized) skein tree.

    No simplification is applied, so every leaf is reached by switches and
    smoothings only; used to inspect the state-degree estimates.
    """
    leaves: list[SkeinState] = []
    modes = (ORIENTED,) if engine == "homfly" else (ORIENTED, DISORIENTED)

    def walk(diag: Diagram, smoothed: int):
        i = first_nondescending(diag)
        if i is None:
            leaves.append(SkeinState(diag, smoothed, diag.writhe, link_components(diag)))
            return
        walk(switch_crossing(diag, i), smoothed)
        for mode in modes:
            walk(smooth_crossing(diag, i, mode), smoothed + 1)

    walk(d, 0)
    return leaves
