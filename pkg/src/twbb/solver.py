"""Anytime branch-and-bound search for exact treewidth.

The solver explores partial elimination orders depth first.  A state
carries the graph left after eliminating a prefix, the width g of that
prefix, and a lower bound h on the width still to come; a state whose
f = max(g, h) reaches the best known width is discarded.  The first
solution is a greedy upper bound, so interrupting the search at any point
still yields a valid order; running to completion proves optimality.

Candidate branches are filtered by four independent rules before
elimination: restriction to non-neighbors of the last eliminated vertex,
a forbidden list that stops re-eliminating a vertex already explored at
an earlier sibling while its neighborhood is unchanged, dropping one of
two candidates that each make the other simplicial-or-almost-simplicial,
and dropping candidates whose fill edges contain a sibling's.  Surviving
children are then shrunk by the forced-elimination and forced-edge rules
before being bounded.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .bounds import mcs_lb, minwidth_lb, state_lower_bound
from .graph import Graph, GraphError, bits, connected_components
from .heuristics import EliminationOrder, HeuristicConfig, best_upper_bound
from .reduction import _reduce_masks

__all__ = [
    "LB_KINDS",
    "RunReport",
    "SearchState",
    "SolverConfig",
    "expand",
    "prune_fill_subset",
    "prune_mutual_simplicial",
    "prune_sibling_order",
    "solve",
]

LB_KINDS = ("mmw", "mcslb", "mw")


@dataclass(frozen=True)
class SolverConfig:
    """Search settings; every rule can be toggled independently.

    seed feeds the randomized restarts of the initial upper-bound
    heuristic (the search itself is deterministic).  ub_heuristic, when
    given, overrides the default of min-fill with 100 seeded restarts.
    """

    time_limit: float | None = None
    seed: int = 0
    reductions: bool = True
    edge_addition: bool = True
    prune_sibling_order: bool = True
    prune_mutual_simplicial: bool = True
    prune_fill_subset: bool = True
    successor_restriction: bool = True
    ub_heuristic: HeuristicConfig | None = None
    lb_kind: str = "mmw"

    def __post_init__(self):
        if self.lb_kind not in LB_KINDS:
            raise GraphError(f"unknown lower bound kind: {self.lb_kind!r}")

    def heuristic(self) -> HeuristicConfig:
        if self.ub_heuristic is not None:
            return self.ub_heuristic
        return HeuristicConfig("min-fill", runs=100, seed=self.seed)


@dataclass(frozen=True)
class SearchState:
    """One node of the search tree.

    graph is what remains after eliminating prefix; g is the width of the
    prefix on the original graph and h a lower bound on the width of the
    rest.  Any completion of this state costs at least f; f also inherits
    the parent's f, which keeps it non-decreasing along a path even when
    h drops, so f >= max(g, h) with equality except after such a drop.
    last is the most recently eliminated vertex (branching or forced) and
    last_neighborhood its neighborhood mask at elimination time.
    forbidden holds (vertex, neighborhood-snapshot) pairs recorded when an
    earlier sibling finished exploring that vertex; re-eliminating it
    while its neighborhood still equals the snapshot cannot lead anywhere
    new.  The engine extends this set dynamically as siblings conclude;
    states built by hand carry a fixed view.
    """

    graph: Graph
    prefix: tuple[int, ...]
    g: int
    h: int
    f: int
    last: int | None = None
    last_neighborhood: int = 0
    forbidden: tuple[tuple[int, int], ...] = ()


@dataclass
class RunReport:
    """Outcome of one solve call.

    proven_lb is the best lower bound established (best_width itself once
    the search has finished).  anytime_trace lists (elapsed-seconds,
    width) improvements, starting from the heuristic solution, with
    strictly decreasing widths.
    """

    best_width: int
    best_order: EliminationOrder
    proven_lb: int
    optimal: bool
    nodes_expanded: int
    elapsed: float
    anytime_trace: list[tuple[float, int]]


def _h_factory(kind: str):
    if kind == "mmw":
        return state_lower_bound
    if kind == "mcslb":
        return lambda g, cap=None: mcs_lb(g).value
    if kind == "mw":
        return lambda g, cap=None: minwidth_lb(g).value
    raise GraphError(f"unknown lower bound kind: {kind!r}")


def prune_sibling_order(candidate: int, s: SearchState) -> bool:
    """True when the candidate's elimination is covered by an earlier sibling.

    Fires when the candidate was fully explored as an earlier child of an
    ancestor and its neighborhood here still equals the recorded
    snapshot.  Right after that sibling this holds automatically whenever
    the two vertices are non-adjacent; adjacent pairs (where re-ordering
    is not known to be safe) never match because the neighborhood lost
    the sibling vertex.
    """
    a = s.graph._adj[candidate]
    for v, snap in s.forbidden:
        if v == candidate and a == snap:
            return True
    return False


def prune_mutual_simplicial(candidates: list[int], g: Graph) -> list[int]:
    """Keep one candidate from each group that pairwise simplify each other.

    When eliminating A leaves B simplicial or almost simplicial and vice
    versa, the two eliminations commute well enough that only one order
    needs exploring; groups linked by such pairs keep their lowest id.
    """
    if len(candidates) < 2:
        return list(candidates)
    adj = g._adj
    status = {b: g.is_simplicial(b) or g.is_almost_simplicial(b) for b in candidates}
    elim: dict[int, Graph] = {}

    def makes(a: int, b: int) -> bool:
        if status[b]:
            # Already simplicial-or-almost; eliminating another vertex can
            # only shrink b's neighborhood and add edges inside it.
            return True
        if not ((adj[a] >> b) & 1) and (adj[a] & adj[b]).bit_count() < 2:
            # b's neighborhood and the edges inside it are untouched.
            return False
        ga = elim.get(a)
        if ga is None:
            ga = elim[a] = g.eliminate(a)
        return ga.is_simplicial(b) or ga.is_almost_simplicial(b)

    parent = {v: v for v in candidates}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    cs = sorted(candidates)
    for i, a in enumerate(cs):
        for b in cs[i + 1 :]:
            if find(a) != find(b) and makes(a, b) and makes(b, a):
                parent[find(b)] = find(a)
    groups: dict[int, int] = {}
    for v in cs:
        r = find(v)
        if r not in groups:
            groups[r] = v
    keep = set(groups.values())
    return [v for v in candidates if v in keep]


def prune_fill_subset(candidates: list[int], g: Graph) -> list[int]:
    """Drop candidates whose fill edges contain another candidate's.

    If fill(A) is a subset of fill(B), eliminating A first is never
    worse, so B is dropped; on equal fill sets the lower id survives.
    """
    if len(candidates) < 2:
        return list(candidates)
    fills = {v: frozenset(g.fill_edges(v)) for v in candidates}
    keep = []
    for v in candidates:
        fv = fills[v]
        for u in candidates:
            if u == v:
                continue
            fu = fills[u]
            if fu < fv or (fu == fv and u < v):
                break
        else:
            keep.append(v)
    return keep


def _make_children(s: SearchState, ub: int, cfg: SolverConfig, is_forbidden, h_func):
    """Generate, filter, shrink and bound the children of a state.

    Returns (children, closed).  children holds (branch-vertex,
    neighborhood-at-elimination, state) triples in ascending (f, vertex)
    order; closed holds the same pair data for candidates discarded
    because their bound already reached ub, which are as concluded as an
    explored sibling for forbidden-list purposes.
    """
    g = s.graph
    active = g.active_mask
    if cfg.successor_restriction and s.last is not None:
        cand_mask = active & ~s.last_neighborhood
        if not cand_mask:
            cand_mask = active
    else:
        cand_mask = active
    cands = list(bits(cand_mask))
    if cfg.prune_sibling_order:
        cands = [v for v in cands if not is_forbidden(v, g)]
    if cfg.prune_mutual_simplicial and len(cands) > 1:
        cands = prune_mutual_simplicial(cands, g)
    if cfg.prune_fill_subset and len(cands) > 1:
        cands = prune_fill_subset(cands, g)

    children = []
    closed = []
    reduce_any = cfg.reductions or cfg.edge_addition
    for v in cands:
        nbv = g._adj[v]
        deg = nbv.bit_count()
        gv = s.g if s.g >= deg else deg
        child_graph = g.eliminate(v)
        h_pre = h_func(child_graph, cap=ub)
        if max(s.f, gv, h_pre) >= ub:
            closed.append((v, nbv))
            continue
        prefix = s.prefix + (v,)
        last, last_nb = v, nbv
        gv2, final_graph, h_post = gv, child_graph, h_pre
        if reduce_any:
            adj = list(child_graph._adj)
            act, gv2, forced, added, lnb = _reduce_masks(
                adj,
                child_graph.active_mask,
                gv,
                h_pre,
                ub if cfg.edge_addition else None,
                cfg.reductions,
                cfg.edge_addition,
            )
            if forced or added:
                final_graph = Graph._from_masks(g.n, adj, act)
                if forced:
                    prefix += tuple(forced)
                    last, last_nb = forced[-1], lnb
                h_post = h_func(final_graph, cap=ub) if act.bit_count() >= 2 else 0
        f = max(s.f, gv2, h_post)
        if f >= ub:
            closed.append((v, nbv))
            continue
        state = SearchState(
            final_graph, prefix, gv2, h_post, f, last, last_nb, s.forbidden
        )
        children.append((v, nbv, state))
    children.sort(key=lambda t: (t[2].f, t[0]))
    return children, closed


def expand(s: SearchState, ub: int, cfg: SolverConfig) -> list[SearchState]:
    """Children of a state with all enabled rules applied, ascending by f."""
    if len(s.graph) < 2:
        raise GraphError("expand requires a state with at least two vertices")
    h_func = _h_factory(cfg.lb_kind)
    entries = s.forbidden

    def is_forbidden(v, graph):
        a = graph._adj[v]
        return any(v == w and a == m for w, m in entries)

    children, _ = _make_children(s, ub, cfg, is_forbidden, h_func)
    return [state for _, _, state in children]


class _Frame:
    __slots__ = ("state", "branch", "branch_nb", "children", "idx", "entries")

    def __init__(self, state, branch, branch_nb):
        self.state = state
        self.branch = branch
        self.branch_nb = branch_nb
        self.children = None
        self.idx = 0
        self.entries = []


def _solve_component(
    sub: Graph,
    cfg: SolverConfig,
    h_func,
    ub: int,
    best: tuple[int, ...],
    root_lb: int,
    deadline: float | None,
    should_stop,
    report,
):
    """Search one connected component.

    ub/best come from the heuristic and root_lb from a lower bound on
    the intact component.  report(width, order) is called on each
    improvement.  Returns (width, order, proven_lb, optimal, nodes,
    interrupted).
    """
    if root_lb >= ub:
        return ub, best, ub, True, 0, False

    g0 = 0
    forced: tuple[int, ...] = ()
    root_graph = sub
    last: int | None = None
    last_nb = 0
    if cfg.reductions or cfg.edge_addition:
        adj = list(sub._adj)
        act, g0, forced_l, added, lnb = _reduce_masks(
            adj,
            sub.active_mask,
            0,
            root_lb,
            ub if cfg.edge_addition else None,
            cfg.reductions,
            cfg.edge_addition,
        )
        if forced_l or added:
            root_graph = Graph._from_masks(sub.n, adj, act)
            forced = tuple(forced_l)
            if forced:
                last, last_nb = forced[-1], lnb

    lb = max(root_lb, g0)
    if len(root_graph) < 2:
        width = g0
        if width < ub:
            ub, best = width, forced + tuple(root_graph.vertices)
            report(ub, best)
        return ub, best, ub, True, 1, False

    h_root = h_func(root_graph, cap=None)
    lb = max(lb, h_root)
    f0 = max(g0, h_root)
    if f0 >= ub:
        return ub, best, ub, True, 1, False

    root = SearchState(root_graph, forced, g0, h_root, f0, last, last_nb, ())
    forb: dict[int, list[int]] = {}

    def is_forbidden(v, graph):
        snaps = forb.get(v)
        if not snaps:
            return False
        a = graph._adj[v]
        return any(a == m for m in snaps)

    stack = [_Frame(root, None, 0)]
    nodes = 0
    interrupted = False

    def pop_frame():
        fr = stack.pop()
        for v in reversed(fr.entries):
            forb[v].pop()
        if stack and fr.branch is not None:
            forb.setdefault(fr.branch, []).append(fr.branch_nb)
            stack[-1].entries.append(fr.branch)

    while stack:
        fr = stack[-1]
        if fr.children is None:
            s = fr.state
            if s.f >= ub:
                pop_frame()
                continue
            if should_stop is not None and should_stop():
                interrupted = True
                break
            if deadline is not None and time.monotonic() >= deadline:
                interrupted = True
                break
            nodes += 1
            if len(s.graph) < 2:
                ub, best = s.g, s.prefix + tuple(s.graph.vertices)
                report(ub, best)
                if ub <= lb:
                    return ub, best, ub, True, nodes, False
                pop_frame()
                continue
            fr.children, closed = _make_children(s, ub, cfg, is_forbidden, h_func)
            if cfg.prune_sibling_order:
                for v, nbmask in closed:
                    forb.setdefault(v, []).append(nbmask)
                    fr.entries.append(v)
            continue
        if fr.idx < len(fr.children):
            bv, nbv, child = fr.children[fr.idx]
            fr.idx += 1
            stack.append(_Frame(child, bv, nbv))
            continue
        pop_frame()

    if interrupted:
        return ub, best, lb, False, nodes, True
    return ub, best, ub, True, nodes, False


def solve(
    g: Graph,
    cfg: SolverConfig | None = None,
    on_improvement=None,
    should_stop=None,
) -> RunReport:
    """Find the treewidth of g, anytime.

    Runs per connected component, reporting the max width, the summed
    node count and one merged improvement trace.  on_improvement(elapsed,
    width, order) is called synchronously for the initial heuristic
    solution and every improvement; should_stop() is polled at node
    boundaries for cooperative cancellation.  Completed runs are fully
    deterministic for a given configuration.
    """
    cfg = cfg or SolverConfig()
    t0 = time.monotonic()
    deadline = t0 + cfg.time_limit if cfg.time_limit is not None else None
    h_func = _h_factory(cfg.lb_kind)
    hcfg = cfg.heuristic()

    comps = connected_components(g)
    trace: list[tuple[float, int]] = []
    if not comps:
        el = time.monotonic() - t0
        trace.append((el, 0))
        if on_improvement is not None:
            on_improvement(el, 0, ())
        return RunReport(0, EliminationOrder((), 0), 0, True, 0, el, trace)

    subs = [g.induced(c) for c in comps]
    comp_best: list[tuple[int, tuple[int, ...]]] = []
    comp_lb: list[int] = []
    for sub in subs:
        w, order = best_upper_bound(sub, hcfg)
        comp_best.append((w, order.vertices))
        comp_lb.append(h_func(sub, cap=None))

    def global_order() -> tuple[int, ...]:
        out: list[int] = []
        for _, vs in comp_best:
            out.extend(vs)
        return tuple(out)

    def emit(width: int):
        if not trace or width < trace[-1][1]:
            el = time.monotonic() - t0
            trace.append((el, width))
            if on_improvement is not None:
                on_improvement(el, width, global_order())

    emit(max(w for w, _ in comp_best))

    total_nodes = 0
    for i, sub in enumerate(subs):
        out_of_time = deadline is not None and time.monotonic() >= deadline
        cancelled = should_stop is not None and should_stop()
        if out_of_time or cancelled:
            continue

        def report(width, order, _i=i):
            comp_best[_i] = (width, order)
            emit(max(w for w, _ in comp_best))

        w, order, lb, _opt, nodes, _ = _solve_component(
            sub,
            cfg,
            h_func,
            comp_best[i][0],
            comp_best[i][1],
            comp_lb[i],
            deadline,
            should_stop,
            report,
        )
        comp_best[i] = (w, order)
        comp_lb[i] = lb
        total_nodes += nodes

    best_width = max(w for w, _ in comp_best)
    proven_lb = max(comp_lb)
    optimal = proven_lb >= best_width
    if optimal:
        proven_lb = best_width
    elapsed = time.monotonic() - t0
    return RunReport(
        best_width,
        EliminationOrder(global_order(), best_width),
        proven_lb,
        optimal,
        total_nodes,
        elapsed,
        trace,
    )
