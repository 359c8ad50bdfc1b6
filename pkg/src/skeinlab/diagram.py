"""Combinatorial oriented link diagrams and the moves the skein engines need.

A crossing is a PD 4-tuple of arc labels listed counterclockwise starting at
the incoming under-strand, so the under-strand runs ``arcs[0] -> arcs[2]``.
The over-strand runs ``arcs[3] -> arcs[1]`` on a positive crossing and
``arcs[1] -> arcs[3]`` on a negative one.  Slot ``p`` of a crossing is the
position ``p`` in that tuple; the strand entering at slot ``p`` leaves at
slot ``p + 2``.

Closed crossingless circles are not expressible with arcs, so a diagram also
carries a count of free loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArcCountError, IndexOutOfRange, OrientationError

ORIENTED = "oriented"
DISORIENTED = "disoriented"

# slot pairs joined by each smoothing; the A-smoothing joins the regions swept
# counterclockwise by the over-strand
A_JOINS = ((0, 1), (2, 3))
B_JOINS = ((0, 3), (1, 2))


@dataclass(frozen=True)
class Crossing:
    arcs: tuple[int, int, int, int]
    sign: int

    def in_slots(self) -> tuple[int, int]:
        return (0, 3) if self.sign > 0 else (0, 1)

    def out_slots(self) -> tuple[int, int]:
        return (2, 1) if self.sign > 0 else (2, 3)

    def joins(self, mode: str) -> tuple[tuple[int, int], tuple[int, int]]:
        """Slot pairs joined by the oriented or disoriented smoothing."""
        oriented = A_JOINS if self.sign > 0 else B_JOINS
        if mode == ORIENTED:
            return oriented
        if mode == DISORIENTED:
            return B_JOINS if oriented is A_JOINS else A_JOINS
        raise ValueError(f"unknown smoothing mode {mode!r}")

    def switched(self) -> "Crossing":
        a, b, c, d = self.arcs
        if self.sign > 0:          # over ran d -> b, becomes the under-strand
            return Crossing((d, a, b, c), -1)
        return Crossing((b, c, d, a), 1)

    def relabeled(self, mapping) -> "Crossing":
        return Crossing(tuple(mapping[x] for x in self.arcs), self.sign)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.free_loops < 0:
            raise ValueError("free_loops must be nonnegative")
        _check_arcs(self.crossings)

    @property
    def c(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def labels(self) -> set[int]:
        return {lab for x in self.crossings for lab in x.arcs}

    def __len__(self):
        return len(self.crossings)


def _check_arcs(crossings: Sequence[Crossing]) -> None:
    heads: dict[int, int] = {}
    tails: dict[int, int] = {}
    for x in crossings:
        if x.sign not in (1, -1):
            raise OrientationError(f"crossing sign must be +-1, got {x.sign}")
        for p in x.in_slots():
            lab = x.arcs[p]
            heads[lab] = heads.get(lab, 0) + 1
        for p in x.out_slots():
            lab = x.arcs[p]
            tails[lab] = tails.get(lab, 0) + 1
    counts: dict[int, int] = {}
    for x in crossings:
        for lab in x.arcs:
            counts[lab] = counts.get(lab, 0) + 1
    bad = sorted(lab for lab, n in counts.items() if n != 2)
    if bad:
        raise ArcCountError(f"arc labels not appearing exactly twice: {bad}")
    broken = sorted(lab for lab in counts if heads.get(lab) != 1 or tails.get(lab) != 1)
    if broken:
        raise OrientationError(f"arcs without one head and one tail: {broken}")


# ---------------------------------------------------------------------------
# tracing


def arc_ends(d: Diagram) -> tuple[dict[int, tuple[int, int]], dict[int, tuple[int, int]]]:
    """``(head, tail)`` maps from arc label to ``(crossing index, slot)``."""
    head: dict[int, tuple[int, int]] = {}
    tail: dict[int, tuple[int, int]] = {}
    for i, x in enumerate(d.crossings):
        for p in x.in_slots():
            head[x.arcs[p]] = (i, p)
        for p in x.out_slots():
            tail[x.arcs[p]] = (i, p)
    return head, tail


def trace_components(d: Diagram) -> list[list[int]]:
    """Arc cycles of the link components that carry crossings.

    Each cycle starts at its lowest label (the base point) and components are
    ordered by that label.  Free loops are not included.
    """
    head, _ = arc_ends(d)
    seen: set[int] = set()
    comps = []
    for start in sorted(head):
        if start in seen:
            continue
        comp = []
        lab = start
        while lab not in seen:
            seen.add(lab)
            comp.append(lab)
            i, p = head[lab]
            lab = d.crossings[i].arcs[(p + 2) % 4]
        comps.append(comp)
    return comps


def first_nondescending(d: Diagram) -> int | None:
    """Index of the first crossing met first on its under-strand, or ``None``.

    Components are traversed in base-point order; a diagram where every
    crossing is first met from above is a layered unlink.
    """
    head, _ = arc_ends(d)
    visited: set[int] = set()
    for comp in trace_components(d):
        for lab in comp:
            i, p = head[lab]
            if i in visited:
                continue
            visited.add(i)
            if p == 0:
                return i
    return None


class _UnionFind:
    def __init__(self, items: Iterable[int] = ()):
        self.parent = {x: x for x in items}

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        # keep the smaller label as representative
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx


def state_loops(d: Diagram, joins_per_crossing: Sequence[Sequence[tuple[int, int]]]) -> int:
    """Number of circles after smoothing every crossing with the given joins."""
    uf = _UnionFind()
    for x, joins in zip(d.crossings, joins_per_crossing):
        for p, r in joins:
            uf.union(x.arcs[p], x.arcs[r])
    return len({uf.find(lab) for lab in d.labels()}) + d.free_loops


def projection_pieces(d: Diagram) -> list[list[int]]:
    """Crossing indices grouped into connected pieces of the 4-valent graph."""
    uf = _UnionFind(range(d.c))
    owner: dict[int, int] = {}
    for i, x in enumerate(d.crossings):
        for lab in x.arcs:
            if lab in owner:
                uf.union(owner[lab], i)
            else:
                owner[lab] = i
    groups: dict[int, list[int]] = {}
    for i in range(d.c):
        groups.setdefault(uf.find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]


# ---------------------------------------------------------------------------
# statistics


@dataclass(frozen=True)
class DiagramStats:
    c: int
    c_plus: int
    c_minus: int
    w: int
    g: int
    link_components: int
    s: int
    murasugi_components: int


def seifert_circles(d: Diagram) -> int:
    return state_loops(d, [x.joins(ORIENTED) for x in d.crossings])


def murasugi_state_components(d: Diagram) -> int:
    """Smooth positive crossings along and negative crossings across the orientation."""
    return state_loops(
        d, [x.joins(ORIENTED if x.sign > 0 else DISORIENTED) for x in d.crossings]
    )


def all_a_loops(d: Diagram) -> int:
    return state_loops(d, [A_JOINS] * d.c)


def all_b_loops(d: Diagram) -> int:
    return state_loops(d, [B_JOINS] * d.c)


def diagram_stats(d: Diagram) -> DiagramStats:
    c_plus = sum(1 for x in d.crossings if x.sign > 0)
    c_minus = d.c - c_plus
    return DiagramStats(
        c=d.c,
        c_plus=c_plus,
        c_minus=c_minus,
        w=c_plus - c_minus,
        g=len(projection_pieces(d)) + d.free_loops,
        link_components=len(trace_components(d)) + d.free_loops,
        s=seifert_circles(d),
        murasugi_components=murasugi_state_components(d),
    )


# ---------------------------------------------------------------------------
# moves


def _reorient(crossings: Sequence[Crossing]) -> list[Crossing]:
    """Re-derive a consistent orientation, keeping arcs that already have one."""
    ends: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(crossings):
        for p, lab in enumerate(x.arcs):
            ends.setdefault(lab, []).append((i, p))
    is_in = {(i, p) for i, x in enumerate(crossings) for p in x.in_slots()}
    under_in: dict[int, int] = {}
    over_in: dict[int, int] = {}
    done: set[int] = set()
    for start in sorted(ends):
        if start in done:
            continue
        e0, e1 = ends[start]
        # the head of the start arc; an arc with exactly one in-slot keeps it
        if (e0 in is_in) != (e1 in is_in):
            cur = e0 if e0 in is_in else e1
        else:
            cur = max(e0, e1)
        lab = start
        while lab not in done:
            done.add(lab)
            i, p = cur
            (under_in if p % 2 == 0 else over_in)[i] = p
            q = (p + 2) % 4
            lab = crossings[i].arcs[q]
            a, b = ends[lab]
            cur = b if a == (i, q) else a
    out = []
    for i, x in enumerate(crossings):
        arcs = x.arcs
        o = over_in[i]
        if under_in[i] == 2:
            arcs = (arcs[2], arcs[3], arcs[0], arcs[1])
            o = (o + 2) % 4
        out.append(Crossing(arcs, 1 if o == 3 else -1))
    return out


def _splice(d: Diagram, removed: set[int], joins: Sequence[tuple[int, int]],
            reorient: bool = False) -> Diagram:
    """Delete crossings and join the freed arc ends pairwise (by label)."""
    uf = _UnionFind()
    touched = set()
    for x, y in joins:
        uf.union(x, y)
        touched.update((x, y))
    kept = [x for i, x in enumerate(d.crossings) if i not in removed]
    remaining = {lab for x in kept for lab in x.arcs}
    closed = {uf.find(lab) for lab in touched} - {uf.find(lab) for lab in remaining}
    kept = [x.relabeled({lab: uf.find(lab) for lab in x.arcs}) for x in kept]
    if reorient and kept:
        kept = _reorient(kept)
    return Diagram(tuple(kept), d.free_loops + len(closed))


def _check_index(d: Diagram, i: int) -> None:
    if not 0 <= i < d.c:
        raise IndexOutOfRange(f"crossing index {i} out of range for {d.c} crossings")


def switch_crossing(d: Diagram, i: int) -> Diagram:
    _check_index(d, i)
    xs = list(d.crossings)
    xs[i] = xs[i].switched()
    return Diagram(tuple(xs), d.free_loops)


def smooth_crossing(d: Diagram, i: int, mode: str = ORIENTED) -> Diagram:
    """Remove crossing ``i`` by one of its two smoothings.

    The disoriented smoothing reverses the orientation of whatever stretch of
    strand needs it; components untouched by the conflict keep theirs.
    """
    _check_index(d, i)
    x = d.crossings[i]
    joins = [(x.arcs[p], x.arcs[r]) for p, r in x.joins(mode)]
    return _splice(d, {i}, joins, reorient=(mode == DISORIENTED))


def mirror(d: Diagram) -> Diagram:
    """Switch every crossing."""
    return Diagram(tuple(x.switched() for x in d.crossings), d.free_loops)


def reverse(d: Diagram) -> Diagram:
    """Reverse the orientation of every component."""
    out = []
    for x in d.crossings:
        a, b, c, e = x.arcs
        out.append(Crossing((c, e, a, b), x.sign))
    return Diagram(tuple(out), d.free_loops)


def relabel(d: Diagram, mapping) -> Diagram:
    return Diagram(tuple(x.relabeled(mapping) for x in d.crossings), d.free_loops)


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    """Split union; ``d2`` is relabeled above every label of ``d1``."""
    offset = max(d1.labels(), default=0)
    shifted = [x.relabeled({lab: lab + offset for lab in x.arcs}) for x in d2.crossings]
    return Diagram(d1.crossings + tuple(shifted), d1.free_loops + d2.free_loops)


def add_kink(d: Diagram, label: int, sign: int, under_first: bool = True) -> Diagram:
    """Insert a Reidemeister I curl of the given sign into arc ``label``."""
    if label not in d.labels():
        raise IndexOutOfRange(f"no arc labeled {label}")
    top = max(d.labels())
    loop, out = top + 1, top + 2
    head, _ = arc_ends(d)
    i, p = head[label]
    xs = list(d.crossings)
    arcs = list(xs[i].arcs)
    arcs[p] = out
    xs[i] = Crossing(tuple(arcs), xs[i].sign)
    if under_first:
        new = (label, out, loop, loop) if sign > 0 else (label, loop, loop, out)
    else:
        new = (loop, loop, out, label) if sign > 0 else (loop, label, out, loop)
    xs.append(Crossing(new, 1 if sign > 0 else -1))
    return Diagram(tuple(xs), d.free_loops)


# ---------------------------------------------------------------------------
# simplification


def _find_r1(d: Diagram):
    for i, x in enumerate(d.crossings):
        for p in range(4):
            if x.arcs[p] == x.arcs[(p + 1) % 4]:
                return i, p
    return None


def _find_r2(d: Diagram):
    ends: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(d.crossings):
        for p, lab in enumerate(x.arcs):
            ends.setdefault(lab, []).append((i, p))
    xs = d.crossings
    for e in sorted(ends):
        (i1, p1), (i2, p2) = ends[e]
        if i1 == i2:
            continue
        for (x, px), (y, py) in (((i1, p1), (i2, p2)), ((i2, p2), (i1, p1))):
            f = xs[y].arcs[(py + 1) % 4]
            if f == e or xs[x].arcs[(px - 1) % 4] != f:
                continue
            if px % 2 != py % 2:
                continue      # alternating bigon, not a Reidemeister II pair
            return x, px, y, py
    return None


def simplify(d: Diagram) -> tuple[Diagram, tuple[int, ...]]:
    """Remove Reidemeister I curls and II bigons until none remain.

    Returns the reduced diagram and the signs of the removed curls, which
    regular-isotopy invariants turn into framing factors.
    """
    kinks: list[int] = []
    while True:
        hit = _find_r1(d)
        if hit is not None:
            i, p = hit
            x = d.crossings[i]
            kinks.append(x.sign)
            d = _splice(d, {i}, [(x.arcs[(p + 2) % 4], x.arcs[(p + 3) % 4])])
            continue
        hit = _find_r2(d)
        if hit is not None:
            x, px, y, py = hit
            cx, cy = d.crossings[x], d.crossings[y]
            joins = [(cx.arcs[(px + 2) % 4], cy.arcs[(py + 2) % 4]),
                     (cx.arcs[(px + 1) % 4], cy.arcs[(py + 3) % 4])]
            d = _splice(d, {x, y}, joins)
            continue
        return d, tuple(kinks)


# ---------------------------------------------------------------------------
# canonical form


def _piece_code(d: Diagram, piece: Sequence[int], head) -> tuple:
    xs = d.crossings
    members = set(piece)
    starts = sorted({lab for i in piece for lab in xs[i].arcs})
    best = None
    for start in starts:
        labels: dict[int, int] = {}
        visit: list[int] = []
        seen: set[int] = set()
        arc = start
        while arc is not None:
            while arc not in labels:
                labels[arc] = len(labels) + 1
                i, p = head[arc]
                if i not in seen:
                    seen.add(i)
                    visit.append(i)
                arc = xs[i].arcs[(p + 2) % 4]
            arc = None
            for i in visit:
                x = xs[i]
                if x.arcs[0] not in labels:
                    arc = x.arcs[0]
                elif x.arcs[x.in_slots()[1]] not in labels:
                    arc = x.arcs[x.in_slots()[1]]
                if arc is not None:
                    break
        assert seen == members
        code = tuple(sorted(tuple(labels[lab] for lab in xs[i].arcs) + (xs[i].sign,)
                            for i in piece))
        if best is None or code < best:
            best = code
    return best


def canonical_key(d: Diagram) -> tuple:
    """Relabeling- and reordering-invariant key; equal keys mean isomorphic diagrams."""
    head, _ = arc_ends(d)
    codes = sorted(_piece_code(d, piece, head) for piece in projection_pieces(d))
    return (tuple(codes), d.free_loops)
