"""Directed dual graph of the visibility regions and its sinks.

An arc crosses a window from the face that sees the window's owner to the
face that does not, i.e. towards the smaller visibility set.  A sink has no
outgoing arc.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .arrangement import RegionDecomposition, visibility_set
from .errors import NotASink

__all__ = ["Arc", "DualGraph", "SinkSet", "build_dual", "find_sinks", "span"]


@dataclass(frozen=True)
class Arc:
    src: int
    dst: int
    owner: int
    window: int


@dataclass
class DualGraph:
    nodes: list
    arcs: list
    incomparable_pairs: list
    decomposition: RegionDecomposition | None = None
    succ: dict = field(default_factory=dict)
    pred: dict = field(default_factory=dict)

    def out_degree(self, u: int) -> int:
        return len(self.succ[u])


@dataclass
class SinkSet:
    sinks: list
    # nodes added to restore reachability when conflicting carriers create cycles
    promoted: list = field(default_factory=list)

    @property
    def m(self) -> int:
        return len(self.sinks)

    def __contains__(self, node):
        return node in self._set

    def __post_init__(self):
        self._set = frozenset(self.sinks)


def build_dual(decomp: RegionDecomposition) -> DualGraph:
    nodes = [f.id for f in decomp.faces]
    arcs = []
    for e in decomp.edges:
        if not e.carriers or e.left_face is None or e.right_face is None:
            continue
        for c in e.carriers:
            src = e.face_on(c.side)
            dst = e.right_face if src == e.left_face else e.left_face
            arcs.append(Arc(src, dst, c.owner, c.window))
    succ = {u: set() for u in nodes}
    pred = {u: set() for u in nodes}
    for a in arcs:
        succ[a.src].add(a.dst)
        pred[a.dst].add(a.src)
    conflicts = sorted({(min(u, v), max(u, v)) for u in nodes for v in succ[u] if u in succ[v]})
    return DualGraph(nodes, arcs, conflicts, decomp, succ, pred)


def _reverse_reach(D: DualGraph, seeds) -> set:
    seen = set(seeds)
    todo = deque(seeds)
    while todo:
        v = todo.popleft()
        for u in D.pred[v]:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return seen


def find_sinks(D: DualGraph) -> SinkSet:
    """Nodes without outgoing arcs, augmented so every node reaches one.

    Only conflicting carriers can leave a node unable to reach a sink; then
    the bottom strongly connected components of the stranded part each
    contribute their members with the fewest visible vertices.
    """
    sinks = [u for u in D.nodes if not D.succ[u]]
    reached = _reverse_reach(D, sinks)
    promoted = []
    while len(reached) < len(D.nodes):
        stranded = [u for u in D.nodes if u not in reached]
        comps = _bottom_components(D, stranded)
        sizes = {}
        decomp = D.decomposition
        for comp in comps:
            for u in comp:
                if u not in sizes:
                    sizes[u] = len(visibility_set(decomp.polygon, decomp.faces[u])) \
                        if decomp is not None else 0
            best = min(sizes[u] for u in comp)
            promoted.extend(sorted(u for u in comp if sizes[u] == best))
        reached = _reverse_reach(D, sinks + promoted)
    return SinkSet(sorted(sinks + promoted), sorted(promoted))


def _bottom_components(D: DualGraph, nodes):
    """Strongly connected components of the subgraph on ``nodes`` that have
    no arc leaving them inside that subgraph."""
    sub = set(nodes)
    index, low, on_stack, stack, comps = {}, {}, set(), [], []
    counter = [0]

    def strongconnect(v):
        # iterative Tarjan
        work = [(v, iter(sorted(D.succ[v] & sub)))]
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        while work:
            u, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(D.succ[w] & sub))))
                    break
                if w in on_stack:
                    low[u] = min(low[u], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[u])
                if low[u] == index[u]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.append(w)
                        if w == u:
                            break
                    comps.append(comp)

    for v in sorted(sub):
        if v not in index:
            strongconnect(v)
    comp_of = {u: i for i, c in enumerate(comps) for u in c}
    bottom = []
    for i, comp in enumerate(comps):
        if all(comp_of[w] == i for u in comp for w in D.succ[u] & sub):
            bottom.append(sorted(comp))
    return bottom


def span(D: DualGraph, s: int, sinks: SinkSet | None = None) -> set:
    """All nodes from which sink ``s`` is reachable, including ``s``."""
    if sinks is None:
        sinks = find_sinks(D)
    if s not in sinks:
        raise NotASink(s)
    return _reverse_reach(D, [s])
