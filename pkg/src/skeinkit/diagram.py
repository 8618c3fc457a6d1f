"""Planar diagram codes and their combinatorics.

A link diagram is given by a *PD code*: one ``X[a,b,c,d]`` token per
crossing listing the four incident arc labels counterclockwise, starting
at the incoming under-strand, plus optional ``O`` tokens for crossing-free
circles.  Arc labels are positive integers, consecutive along each
component (wrapping at the component's maximum back to its minimum).

This module handles everything that is purely diagrammatic:

* parsing and validation (:func:`parse_pd`, :func:`analyze`),
* orientation, crossing signs, writhe,
* smoothing states and their circle counts (:func:`apply_state`),
* the touch-graph of a state and adequacy decisions (:func:`adequacy`),
* mirror images,
* parallel cabling with per-component multiplicities (:func:`cable_multi`),
* sweep plans for the state-sum engine (:func:`plan_sweep`),
* a small built-in catalog of verified diagrams (:func:`catalog_lookup`).

Smoothing conventions: for ``X[a, b, c, d]`` the A-smoothing joins the arc
pairs ``(a, b)`` and ``(c, d)``; the B-smoothing joins ``(a, d)`` and
``(b, c)``.  A crossing is positive exactly when its over-strand enters at
position ``d``.
"""

from __future__ import annotations

import dataclasses
import functools
import re
from importlib import resources
from typing import Iterable, Optional, Sequence, Union

from . import budgets
from .errors import BudgetError, InternalError, PDError

Crossing = tuple[int, int, int, int]


def _as_crossing(item) -> Crossing:
    t = tuple(int(x) for x in item)
    if len(t) != 4:
        raise PDError(f"crossing needs exactly 4 arc labels, got {item!r}")
    if any(x < 1 for x in t):
        raise PDError(f"arc labels must be positive integers, got {item!r}")
    return t  # type: ignore[return-value]


@dataclasses.dataclass(frozen=True, slots=True)
class PDCode:
    """An immutable planar-diagram code.

    ``crossings`` may be passed as any iterable of 4-sequences; it is
    normalized to a tuple of int 4-tuples.  ``extra_circles`` counts
    crossing-free unknot components drawn beside the rest.
    """

    crossings: tuple[Crossing, ...] = ()
    extra_circles: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "crossings",
            tuple(_as_crossing(c) for c in self.crossings))
        if self.extra_circles < 0:
            raise PDError("extra_circles must be >= 0")

    def __len__(self) -> int:
        return len(self.crossings)

    def __str__(self) -> str:
        return format_pd(self)

    def validate(self) -> "DiagramInfo":
        return analyze(self)


_TOKEN = re.compile(
    r"""X\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]|(O)|(\S)""",
    re.VERBOSE,
)


def parse_pd(text: str) -> PDCode:
    """Parse a PD string: ``X[a,b,c,d]`` tokens, ``O`` circles, # comments.

    Tokens may be separated by whitespace and commas; the result is
    validated (arc traversal, consecutive labels, under-strand entry).
    """
    crossings = []
    circles = 0
    for rawline in text.splitlines():
        line = rawline.split("#", 1)[0]
        pos = 0
        for m in _TOKEN.finditer(line):
            if m.group(5):
                circles += 1
            elif m.group(1) is not None:
                crossings.append(tuple(int(m.group(i)) for i in (1, 2, 3, 4)))
            else:
                ch = m.group(6)
                if ch in ", \t":
                    continue
                raise PDError(
                    f"unexpected character {ch!r} at column {m.start() + 1}: "
                    f"{rawline.strip()!r}")
    pd = PDCode(tuple(crossings), circles)
    analyze(pd)
    return pd


def format_pd(pd: PDCode) -> str:
    toks = [f"X[{a},{b},{c},{d}]" for a, b, c, d in pd.crossings]
    toks.extend(["O"] * pd.extra_circles)
    return " ".join(toks)


@dataclasses.dataclass(frozen=True)
class Component:
    """One oriented link component.

    ``arcs[i]`` enters the crossing of ``passages[i]``; the passage exits
    into ``arcs[(i+1) % len]``.  Each passage is (crossing index,
    entry position, exit position) with positions in 0..3.
    """

    arcs: tuple[int, ...]
    passages: tuple[tuple[int, int, int], ...]


@dataclasses.dataclass(frozen=True)
class DiagramInfo:
    """Validated structural data for a PD code."""

    pd: PDCode
    arc_ports: dict
    components: tuple[Component, ...]
    over_entry: tuple[int, ...]      # per crossing: 1 or 3
    signs: tuple[int, ...]           # per crossing: +1 or -1
    writhe: int
    comp_of_arc: dict

    @property
    def total_components(self) -> int:
        return len(self.components) + self.pd.extra_circles


def _port_scan(pd: PDCode) -> dict:
    """arc label -> list of (crossing, position) occurrences, in scan order."""
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, cr in enumerate(pd.crossings):
        for pos, arc in enumerate(cr):
            occ.setdefault(arc, []).append((ci, pos))
    return occ


@functools.lru_cache(maxsize=512)
def analyze(pd: PDCode) -> DiagramInfo:
    """Validate a PD code and compute orientation, signs, and writhe.

    Raises PDError when the code is not a closed-up diagram: every label
    must occur exactly twice, components must carry cyclically consecutive
    labels, and orientation must enter each crossing's under-strand at the
    first tuple position.
    """
    occ = _port_scan(pd)
    n = len(pd.crossings)
    if n == 0 and pd.extra_circles == 0:
        raise PDError("empty diagram: no crossings and no circles")
    for arc, ports in occ.items():
        if len(ports) != 2:
            raise PDError(
                f"arc {arc} appears {len(ports)} times; every arc label "
                f"must occur exactly twice")

    # --- walk unoriented strands -------------------------------------
    seen: set[int] = set()
    raw_components = []
    for arc in sorted(occ):
        if arc in seen:
            continue
        # walk forward: we ENTER the crossing at the arc's first occurrence
        arcs = [arc]
        enters = [occ[arc][0]]
        seen.add(arc)
        while True:
            ci, pos = enters[-1]
            exit_pos = pos ^ 2
            nxt = pd.crossings[ci][exit_pos]
            # the next entry is the OTHER occurrence of nxt (kink arcs
            # reuse the crossing, but never the same position)
            p1, p2 = occ[nxt]
            nxt_entry = p2 if p1 == (ci, exit_pos) else p1
            if nxt == arcs[0] and nxt_entry == enters[0]:
                break
            arcs.append(nxt)
            enters.append(nxt_entry)
            seen.add(nxt)
        raw_components.append((arcs, enters))

    # --- orient each component by its labels -------------------------
    components = []
    for arcs, enters in raw_components:
        lo = min(arcs)
        size = len(arcs)
        want = [lo + i for i in range(size)]
        start = arcs.index(lo)
        fwd = [arcs[(start + i) % size] for i in range(size)]
        bwd = [arcs[(start - i) % size] for i in range(size)]
        ok_f, ok_b = fwd == want, bwd == want
        if not ok_f and not ok_b:
            raise PDError(
                f"component containing arc {lo} has non-consecutive labels "
                f"{sorted(arcs)} along the strand")

        def passages_for(direction):
            # direction +1: walk as recorded; -1: reversed (swap entry/exit)
            out_arcs, out_pass = [], []
            for i in range(size):
                if direction == 1:
                    j = (start + i) % size
                    ci, pos = enters[j]
                    out_arcs.append(arcs[j])
                    out_pass.append((ci, pos, pos ^ 2))
                else:
                    j = (start - i) % size
                    # arc arcs[j] was ENTERED at enters[j] walking forward;
                    # walking backward it enters where the previous forward
                    # passage exited: the other end of the arc.
                    ci, pos = enters[(j - 1) % size]
                    out_arcs.append(arcs[j])
                    out_pass.append((ci, pos ^ 2, pos))
            return out_arcs, out_pass

        def under_violations(pss):
            return sum(1 for _, p, _ in pss if p == 2)

        choice = None
        if ok_f and ok_b:
            # ambiguous run (short component): anchor at an under-passage
            fa, fp = passages_for(1)
            ba, bp = passages_for(-1)
            vf, vb = under_violations(fp), under_violations(bp)
            if vf == 0:
                choice = (fa, fp)
            elif vb == 0:
                choice = (ba, bp)
            else:
                raise PDError(
                    f"component containing arc {lo}: no orientation enters "
                    f"all its under-crossings at the first position")
        elif ok_f:
            choice = passages_for(1)
        else:
            choice = passages_for(-1)
        c_arcs, c_pass = choice
        if under_violations(c_pass):
            raise PDError(
                f"component containing arc {lo}: labels orient the strand "
                f"against an under-crossing entry")
        components.append(Component(tuple(c_arcs), tuple(c_pass)))

    # --- signs --------------------------------------------------------
    over_entry = [0] * n
    under_seen = [False] * n
    comp_of_arc = {}
    for k, comp in enumerate(components):
        for a in comp.arcs:
            comp_of_arc[a] = k
        for ci, p, _ in comp.passages:
            if p == 0:
                under_seen[ci] = True
            elif p in (1, 3):
                over_entry[ci] = p
            else:  # p == 2 cannot survive validation above
                raise InternalError("unoriented under passage")
    for ci in range(n):
        if not under_seen[ci] or over_entry[ci] == 0:
            raise PDError(
                f"crossing {ci} is not traversed once under and once over")
    signs = tuple(1 if p == 3 else -1 for p in over_entry)
    return DiagramInfo(
        pd=pd,
        arc_ports={a: tuple(ps) for a, ps in occ.items()},
        components=tuple(components),
        over_entry=tuple(over_entry),
        signs=signs,
        writhe=sum(signs),
        comp_of_arc=comp_of_arc,
    )


def validate(pd: PDCode) -> DiagramInfo:
    """Alias for :func:`analyze`."""
    return analyze(pd)


def writhe(pd: PDCode) -> int:
    return analyze(pd).writhe


def mirror(pd: PDCode) -> PDCode:
    """The mirror image: every crossing switched, labels untouched.

    Rotates each tuple so the old over-entry position comes first, making
    the old over-strand the new under-strand.
    """
    info = analyze(pd)
    out = []
    for ci, cr in enumerate(pd.crossings):
        o = info.over_entry[ci]
        out.append(tuple(cr[(o + k) % 4] for k in range(4)))
    return PDCode(tuple(out), pd.extra_circles)


# ---------------------------------------------------------------------------
# smoothing states


def all_a(pd: PDCode) -> str:
    return "A" * len(pd.crossings)


def all_b(pd: PDCode) -> str:
    return "B" * len(pd.crossings)


def _check_state(pd: PDCode, state: Sequence[str]) -> str:
    s = "".join(state).upper()
    if len(s) != len(pd.crossings) or any(ch not in "AB" for ch in s):
        raise PDError(
            f"state must assign 'A' or 'B' to each of the "
            f"{len(pd.crossings)} crossings, got {state!r}")
    return s


@dataclasses.dataclass(frozen=True)
class StateCircles:
    """Circles of a smoothed diagram.

    ``arc_circle`` maps each arc label to its circle id (0-based, in order
    of first appearance by port scan; crossing-free circles come last).
    ``crossing_strands`` gives, per crossing, the circle ids of the two
    smoothing strands that replaced it.
    """

    count: int
    arc_circle: dict
    crossing_strands: tuple[tuple[int, int], ...]


def apply_state(pd: PDCode, state: Sequence[str]) -> StateCircles:
    """Smooth every crossing according to ``state`` and count circles."""
    s = _check_state(pd, state)
    analyze(pd)
    n = len(pd.crossings)
    parent = list(range(4 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    occ = _port_scan(pd)
    for ports in occ.values():
        (c1, p1), (c2, p2) = ports
        union(4 * c1 + p1, 4 * c2 + p2)
    for ci, ch in enumerate(s):
        if ch == "A":
            union(4 * ci + 0, 4 * ci + 1)
            union(4 * ci + 2, 4 * ci + 3)
        else:
            union(4 * ci + 0, 4 * ci + 3)
            union(4 * ci + 1, 4 * ci + 2)

    cid: dict[int, int] = {}
    for x in range(4 * n):
        r = find(x)
        if r not in cid:
            cid[r] = len(cid)
    arc_circle = {}
    for a, ports in occ.items():
        c, p = ports[0]
        arc_circle[a] = cid[find(4 * c + p)]
    strands = []
    for ci, ch in enumerate(s):
        if ch == "A":
            strands.append((cid[find(4 * ci)], cid[find(4 * ci + 2)]))
        else:
            strands.append((cid[find(4 * ci)], cid[find(4 * ci + 1)]))
    return StateCircles(
        count=len(cid) + pd.extra_circles,
        arc_circle=arc_circle,
        crossing_strands=tuple(strands),
    )


@dataclasses.dataclass(frozen=True)
class StateGraph:
    """Touch-graph of a smoothing state: one vertex per circle, one edge
    per crossing connecting the two circles its smoothing strands lie on."""

    circles: int
    edges: tuple[tuple[int, int], ...]

    @property
    def loops(self) -> tuple[int, ...]:
        return tuple(i for i, (u, v) in enumerate(self.edges) if u == v)

    @property
    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)


def state_graph(pd: PDCode, state: Sequence[str]) -> StateGraph:
    sc = apply_state(pd, state)
    return StateGraph(circles=sc.count, edges=sc.crossing_strands)


@dataclasses.dataclass(frozen=True)
class AdequacyReport:
    a_adequate: bool
    b_adequate: bool
    a_circles: int
    b_circles: int

    @property
    def adequate(self) -> bool:
        return self.a_adequate and self.b_adequate


def adequacy(pd: PDCode) -> AdequacyReport:
    """A diagram is A-adequate when no crossing touches the same circle
    twice in the all-A state; likewise for B."""
    ga = state_graph(pd, all_a(pd))
    gb = state_graph(pd, all_b(pd))
    return AdequacyReport(
        a_adequate=not ga.has_loop,
        b_adequate=not gb.has_loop,
        a_circles=ga.circles,
        b_circles=gb.circles,
    )


# ---------------------------------------------------------------------------
# assembling diagrams from abstract crossing data


def emit_pd(num_nodes: int,
            links: Iterable[tuple],
            extra_circles: int = 0) -> PDCode:
    """Build a PD code from abstract crossings and wiring.

    Each of the ``num_nodes`` crossings has four ports ``("p", i, s)`` for
    slots s = 0..3 listed counterclockwise with the under-strand on the
    0-2 axis.  ``links`` connects terminals pairwise: node ports (each
    exactly once) and arbitrary hashable junction values (each exactly
    twice).  Junction chains are contracted; junction-only cycles become
    crossing-free circles.  Arc labels are assigned by walking the strands.
    """
    adj: dict = {}
    for t, u in links:
        adj.setdefault(t, []).append(u)
        adj.setdefault(u, []).append(t)
    for t, nbrs in adj.items():
        limit = 1 if (isinstance(t, tuple) and len(t) == 3 and t[0] == "p") \
            else 2
        if len(nbrs) != limit:
            raise InternalError(
                f"terminal {t!r} has degree {len(nbrs)}, expected {limit}")

    def is_port(t):
        return isinstance(t, tuple) and len(t) == 3 and t[0] == "p"

    # contract junction chains into port-to-port glue
    glue: dict = {}
    visited: set = set()
    circles = extra_circles
    for t in adj:
        if not is_port(t) or t in visited:
            continue
        visited.add(t)
        prev, cur = t, adj[t][0]
        while not is_port(cur):
            nxts = [x for x in adj[cur] if x != prev]
            if not nxts:  # a junction linked twice to the same neighbor
                nxts = [adj[cur][1]] if adj[cur][0] == prev else [adj[cur][0]]
            visited.add(cur)
            prev, cur = cur, nxts[0]
        visited.add(cur)
        glue[t] = cur
        glue[cur] = t
    # leftover junction-only cycles are free circles
    junk = [t for t in adj if not is_port(t) and t not in visited]
    seen: set = set()
    for t in junk:
        if t in seen:
            continue
        seen.add(t)
        prev, cur = t, adj[t][0]
        while cur != t:
            seen.add(cur)
            nxts = [x for x in adj[cur] if x != prev]
            prev, cur = cur, (nxts[0] if nxts else adj[cur][0])
        circles += 1

    expected_ports = {("p", i, s) for i in range(num_nodes) for s in range(4)}
    if set(glue) != expected_ports:
        missing = expected_ports - set(glue)
        raise InternalError(f"unwired crossing ports: {sorted(missing)[:4]}")

    # walk strands, assigning labels
    slot_label: dict[tuple, int] = {}
    under_entry: dict[int, int] = {}
    entered: set = set()
    label = 0
    for start in sorted(expected_ports, key=lambda p: (p[1], p[2])):
        if start in entered:
            continue
        # gather passages: we ENTER crossings at these ports, in order
        passages = []
        cur = start
        while True:
            passages.append(cur)
            entered.add(cur)
            _, i, s = cur
            exit_port = ("p", i, s ^ 2)
            entered.add(exit_port)      # its arc is the outgoing one
            cur = glue[exit_port]
            if cur == start:
                break
        size = len(passages)
        for k, port in enumerate(passages):
            _, i, s = port
            incoming = label + (k if k else size)
            outgoing = label + k + 1
            slot_label[port] = incoming
            slot_label[("p", i, s ^ 2)] = outgoing
            if s in (0, 2):
                under_entry[i] = s
        label += size

    crossings = []
    for i in range(num_nodes):
        u = under_entry.get(i)
        if u is None:
            raise InternalError(f"crossing {i} has no under passage")
        crossings.append(tuple(
            slot_label[("p", i, (u + k) % 4)] for k in range(4)))
    pd = PDCode(tuple(crossings), circles)
    if pd.crossings or pd.extra_circles:    # fully-deleted cables are empty
        analyze(pd)
    return pd


def cable_multi(pd: PDCode, mults: Sequence[int]) -> PDCode:
    """Replace component k by ``mults[k]`` parallel copies (0 deletes it).

    Components are ordered by smallest arc label; crossing-free circles
    come after all arc components.  Blackboard framing: each copy follows
    the diagram, so a crossing between components of multiplicity r and s
    becomes an r*s grid of crossings of the same sign.
    """
    info = analyze(pd)
    mults = list(mults)
    if len(mults) != info.total_components:
        raise PDError(
            f"need one multiplicity per component "
            f"({info.total_components}), got {len(mults)}")
    if any(m < 0 for m in mults):
        raise PDError("multiplicities must be >= 0")

    r_of_arc = {a: mults[k] for a, k in info.comp_of_arc.items()}
    # multiplicity seen by each (crossing, slot)
    slot_mult = {}
    for ci, cr in enumerate(pd.crossings):
        for s in range(4):
            slot_mult[(ci, s)] = r_of_arc[cr[s]]

    links: list[tuple] = []
    nodes = 0
    node_id: dict[tuple, int] = {}

    def port(ci, i, j, s):
        key = (ci, i, j)
        return ("p", node_id[key], s)

    for ci in range(len(pd.crossings)):
        ru = slot_mult[(ci, 0)]
        ro = slot_mult[(ci, 1)]
        if ru and ro:
            for i in range(ru):
                for j in range(ro):
                    node_id[(ci, i, j)] = nodes
                    nodes += 1
            for i in range(ru):
                for j in range(ro):
                    # south face
                    if j == 0:
                        links.append((port(ci, i, j, 0), ("t", ci, 0, i)))
                    else:
                        links.append((port(ci, i, j, 0), port(ci, i, j - 1, 2)))
                    # north boundary
                    if j == ro - 1:
                        links.append((port(ci, i, j, 2),
                                      ("t", ci, 2, ru - 1 - i)))
                    # east face
                    if i == ru - 1:
                        links.append((port(ci, i, j, 1), ("t", ci, 1, j)))
                    else:
                        links.append((port(ci, i, j, 1), port(ci, i + 1, j, 3)))
                    # west boundary
                    if i == 0:
                        links.append((port(ci, i, j, 3),
                                      ("t", ci, 3, ro - 1 - j)))
        elif ro:    # under strand deleted: over bundle passes straight
            for k in range(ro):
                links.append((("t", ci, 1, k), ("t", ci, 3, ro - 1 - k)))
        elif ru:    # over strand deleted
            for k in range(ru):
                links.append((("t", ci, 0, k), ("t", ci, 2, ru - 1 - k)))

    # arcs: matching cabled endpoints reverses the counterclockwise index
    for arc, ports in info.arc_ports.items():
        r = r_of_arc[arc]
        (c1, s1), (c2, s2) = ports
        for k in range(r):
            links.append((("t", c1, s1, k), ("t", c2, s2, r - 1 - k)))

    extra = 0
    n_arc_comps = len(info.components)
    for k in range(pd.extra_circles):
        extra += mults[n_arc_comps + k]
    return emit_pd(nodes, links, extra)


def cable(pd: PDCode, r: int) -> PDCode:
    """All components replaced by r parallel copies (r >= 1)."""
    if r < 1:
        raise PDError("cable multiplicity must be >= 1")
    info = analyze(pd)
    return cable_multi(pd, [r] * info.total_components)


# ---------------------------------------------------------------------------
# sweep plans


@dataclasses.dataclass(frozen=True)
class SweepOp:
    """One crossing insertion in a sweep, with precompiled bookkeeping.

    ``width_in`` open ends exist before the crossing; its four new ends are
    appended at indices width_in..width_in+3 in tuple-position order.  Then
    ``closures`` (pairs of indices in the appended frame) are merged, and the
    survivors are re-packed by ``keep``/``rank``.
    """

    crossing: int
    width_in: int
    closures: tuple[tuple[int, int], ...]
    keep: tuple[int, ...]
    rank: tuple[int, ...]          # old index -> new index or -1
    width_out: int


@dataclasses.dataclass(frozen=True)
class SweepPlan:
    """A crossing order plus per-step wiring for the pairing sweep."""

    pd: PDCode
    order: tuple[int, ...]
    ops: tuple[SweepOp, ...]
    max_width: int


def plan_sweep(pd: PDCode,
               order: Optional[Sequence[int]] = None,
               max_width: Optional[int] = None) -> SweepPlan:
    """Choose a crossing order and precompile the sweep bookkeeping.

    Without an explicit order, a greedy heuristic repeatedly inserts the
    crossing that minimizes the resulting number of open strand-ends.
    Raises BudgetError when the peak width exceeds the ``max_width``
    budget (argument, else SKEINKIT_MAX_WIDTH, else default).
    """
    analyze(pd)
    limit = budgets.get("max_width", max_width)
    n = len(pd.crossings)
    occ = _port_scan(pd)

    def num_closures(open_ends: dict, ci: int) -> int:
        """How many arcs close when crossing ci is inserted now."""
        k = 0
        seen_new = set()
        for s in range(4):
            arc = pd.crossings[ci][s]
            if arc in seen_new:          # kink arc: closes immediately
                k += 1
            elif arc in open_ends:
                k += 1
            else:
                seen_new.add(arc)
        return k

    if order is None:
        remaining = set(range(n))
        open_ends: dict[int, int] = {}
        chosen = []
        while remaining:
            best = None
            for ci in sorted(remaining):
                k = num_closures(open_ends, ci)
                w1 = len(open_ends) + 4 - 2 * k
                key = (w1, ci)
                if best is None or key < best[0]:
                    best = (key, ci)
            ci = best[1]
            chosen.append(ci)
            remaining.discard(ci)
            # update open ends (indices are placeholders here; only
            # membership matters for planning)
            w0 = len(open_ends)
            for s in range(4):
                arc = pd.crossings[ci][s]
                if arc in open_ends:
                    del open_ends[arc]
                else:
                    open_ends[arc] = 1
            # kink arcs appear twice among the four slots: both inserted
            # and removed above, net zero — handled by the toggle.
        order = chosen
    else:
        order = list(order)
        if sorted(order) != list(range(n)):
            raise PDError(f"order must be a permutation of 0..{n - 1}")

    # compile ops with real index bookkeeping
    ops = []
    open_list: list[int] = []       # arc label at each open index
    peak = 0
    for ci in order:
        w0 = len(open_list)
        frame = open_list + [pd.crossings[ci][s] for s in range(4)]
        first_at: dict[int, int] = {}
        pairs = []
        closed = set()
        for idx, arc in enumerate(frame):
            if arc in first_at:
                i, j = first_at.pop(arc), idx
                pairs.append((i, j))
                closed.add(i)
                closed.add(j)
            else:
                first_at[arc] = idx
        # only pairs where at least one index is new close NOW; an arc fully
        # inside open_list was already merged earlier — cannot happen.
        keep = tuple(i for i in range(w0 + 4) if i not in closed)
        rank = [-1] * (w0 + 4)
        for k, i in enumerate(keep):
            rank[i] = k
        ops.append(SweepOp(
            crossing=ci,
            width_in=w0,
            closures=tuple(pairs),
            keep=keep,
            rank=tuple(rank),
            width_out=len(keep),
        ))
        peak = max(peak, len(keep))
        open_list = [frame[i] for i in keep]
    if open_list:
        raise InternalError(f"sweep left open ends: {open_list}")
    if peak > limit:
        raise BudgetError("max_width", limit, needed=peak,
                          detail="try another crossing order")
    return SweepPlan(pd=pd, order=tuple(order), ops=tuple(ops),
                     max_width=peak)


# ---------------------------------------------------------------------------
# catalog


@functools.lru_cache(maxsize=1)
def _catalog() -> dict[str, PDCode]:
    out = {}
    text = resources.files(__package__).joinpath("data/catalog.txt") \
        .read_text(encoding="utf-8")
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, _, body = line.partition(":")
        pd = parse_pd(body)
        out[name.strip()] = pd
    return out


def catalog_names() -> list[str]:
    return sorted(_catalog())


def catalog_lookup(name: str) -> PDCode:
    try:
        return _catalog()[name]
    except KeyError:
        raise PDError(
            f"unknown catalog entry {name!r}; available: "
            f"{', '.join(catalog_names())}") from None
