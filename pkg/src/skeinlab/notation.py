"""Text notations for link diagrams.

PD grammar (whitespace ignored)::

    diagram := term (";" term)*
    term    := "X[" int "," int "," int "," int "]" | "O*" int

Each ``X[a,b,c,d]`` lists arcs counterclockwise from the incoming
under-strand.  ``O*k`` adds ``k`` crossingless circles.

Braid grammar: ``"braid:" n "|" w1 " " w2 ...`` with signed generator
indices; the diagram is the standard closure of the braid.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import Crossing, Diagram, _UnionFind, trace_components
from .errors import (ArcCountError, GeneratorOutOfRange, MalformedToken,
                     NotationError, OrientationError)

_X_TERM = re.compile(r"X\[(-?\d+),(-?\d+),(-?\d+),(-?\d+)\]")
_O_TERM = re.compile(r"O\*(\d+)")
_BRAID = re.compile(r"braid:(\d+)\|(-?\d+(?: -?\d+)*)")


@dataclass(frozen=True)
class PDCrossing:
    arcs: tuple[int, int, int, int]


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strand_count < 1:
            raise GeneratorOutOfRange("a braid needs at least one strand")
        for g in self.letters:
            if g == 0 or abs(g) >= self.strand_count:
                raise GeneratorOutOfRange(
                    f"generator {g} outside 1..{self.strand_count - 1}")


def _tokenize_pd(text: str) -> tuple[list[PDCrossing], int]:
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise MalformedToken("empty diagram string")
    crossings: list[PDCrossing] = []
    loops = 0
    for term in compact.split(";"):
        m = _X_TERM.fullmatch(term)
        if m:
            arcs = tuple(int(v) for v in m.groups())
            if min(arcs) < 1:
                raise MalformedToken(f"arc labels must be positive: {term}")
            crossings.append(PDCrossing(arcs))
            continue
        m = _O_TERM.fullmatch(term)
        if m:
            loops += int(m.group(1))
            continue
        raise MalformedToken(f"cannot parse term {term!r}")
    return crossings, loops


def _fallback_sign(arcs) -> int:
    # consecutive-label convention: the over-strand runs from label n to n + 1
    b, d = arcs[1], arcs[3]
    return 1 if (b - d == 1 or d - b > 1) else -1


def _is_head(slot: int, sign: int) -> bool:
    if slot == 0:
        return True
    if slot == 2:
        return False
    return (sign < 0) if slot == 1 else (sign > 0)


def orient_pd(crossings: list[PDCrossing]) -> list[Crossing]:
    """Deduce every crossing sign from the fixed under-strand directions."""
    occ: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(crossings):
        for p, lab in enumerate(x.arcs):
            occ.setdefault(lab, []).append((i, p))
    bad = sorted(lab for lab, where in occ.items() if len(where) != 2)
    if bad:
        raise ArcCountError(f"arc labels not appearing exactly twice: {bad}")

    signs: dict[int, int] = {}

    def role(i, p):
        if p % 2 == 0:
            return p == 0
        if i in signs:
            return _is_head(p, signs[i])
        return None

    def propagate():
        changed = True
        while changed:
            changed = False
            for lab, ((i, p), (j, r)) in occ.items():
                ri, rj = role(i, p), role(j, r)
                if ri is not None and rj is not None:
                    if ri == rj:
                        raise OrientationError(f"arc {lab} cannot be traced consistently")
                    continue
                if ri is None and rj is None:
                    continue
                # exactly one end free: it must take the opposite role
                k, s, want = (i, p, not rj) if ri is None else (j, r, not ri)
                signs[k] = 1 if _is_head(s, 1) == want else -1
                changed = True

    propagate()
    for i, x in enumerate(crossings):
        if i not in signs:
            signs[i] = _fallback_sign(x.arcs)
            propagate()
    return [Crossing(x.arcs, signs[i]) for i, x in enumerate(crossings)]


def parse_pd(text: str) -> Diagram:
    crossings, loops = _tokenize_pd(text)
    try:
        return Diagram(tuple(orient_pd(crossings)), loops)
    except NotationError:
        raise
    except ValueError as exc:
        raise MalformedToken(str(exc)) from exc


def parse_braid_word(text: str) -> BraidWord:
    m = _BRAID.fullmatch(text.strip())
    if not m:
        raise MalformedToken(f"cannot parse braid {text!r}")
    return BraidWord(int(m.group(1)), tuple(int(v) for v in m.group(2).split()))


def braid_closure(word: BraidWord) -> Diagram:
    """Closure of a braid drawn bottom to top, strands numbered left to right."""
    n = word.strand_count
    cur = list(range(1, n + 1))
    nxt = n + 1
    raw: list[Crossing] = []
    for g in word.letters:
        k = abs(g) - 1
        in_l, in_r = cur[k], cur[k + 1]
        new_l, new_r = nxt, nxt + 1
        nxt += 2
        if g > 0:   # left strand passes over, bottom-left to top-right
            raw.append(Crossing((in_r, new_r, new_l, in_l), 1))
        else:
            raw.append(Crossing((in_l, in_r, new_r, new_l), -1))
        cur[k], cur[k + 1] = new_l, new_r
    uf = _UnionFind()
    loops = 0
    for k in range(n):
        if cur[k] == k + 1:
            loops += 1
        else:
            uf.union(cur[k], k + 1)
    xs = tuple(x.relabeled({lab: uf.find(lab) for lab in x.arcs}) for x in raw)
    return normalize_labels(Diagram(xs, loops))


def parse_braid(text: str) -> Diagram:
    return braid_closure(parse_braid_word(text))


def parse_notation(text: str) -> Diagram:
    """Dispatch on the notation prefix."""
    if text.strip().startswith("braid:"):
        return parse_braid(text)
    return parse_pd(text)


def normalize_labels(d: Diagram) -> Diagram:
    """Relabel arcs 1..2c consecutively along each component."""
    mapping: dict[int, int] = {}
    for comp in trace_components(d):
        for lab in comp:
            mapping[lab] = len(mapping) + 1
    return Diagram(tuple(x.relabeled(mapping) for x in d.crossings), d.free_loops)


def serialize_diagram(d: Diagram) -> str:
    d = normalize_labels(d)
    terms = ["X[{},{},{},{}]".format(*x.arcs) for x in d.crossings]
    if d.free_loops or not terms:
        terms.append(f"O*{d.free_loops}")
    return ";".join(terms)
