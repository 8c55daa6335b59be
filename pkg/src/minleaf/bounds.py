"""Closed-form leaf bounds and classical sufficient conditions.

Two bounds drive the verification harness:

* theorem_bound(n) = floor((2n+4)/9): every connected cubic graph on
  n >= 8 vertices is claimed to have a spanning tree with at most that
  many leaves.
* conjecture_bound(n) = floor((n+2)/6): the conjectured bound, tight on
  the extremal family built in `family`.

The degree-sum and independence-number conditions (traceability when
sigma_2 >= n-1, a spanning k-ended tree when sigma_2 >= n-k+1 or when
alpha <= connectivity + k - 1) are implemented exactly on small graphs and
cross-checked against the exact solver.  Graphs with no independent pair
get an infinite sigma_2 and satisfy every degree-sum condition vacuously:
complete graphs are trivially traceable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf

from .graph import BudgetExceeded, Graph, block_cut_decomposition, is_connected, write_graph6

SIGMA_EXACT_MAX_N = 20
ALPHA_EXACT_MAX_N = 24


@dataclass(frozen=True)
class ConditionReport:
    """Evaluated sufficient conditions for one graph."""

    graph_id: str
    sigma2: float  # int value, or math.inf when no independent pair exists
    alpha: int
    connectivity: int
    ore_traceable: bool
    bt_k_ended: int
    win_k_ended: int | None

    def to_json_dict(self) -> dict:
        return {
            "graphId": self.graph_id,
            "sigma2": None if self.sigma2 == inf else int(self.sigma2),
            "alpha": self.alpha,
            "connectivity": self.connectivity,
            "oreTraceable": self.ore_traceable,
            "btKEnded": self.bt_k_ended,
            "winKEnded": self.win_k_ended,
        }


def theorem_bound(n: int) -> int | None:
    """floor((2n+4)/9) for n >= 8; None outside the hypothesis."""
    if n < 8:
        return None
    return (2 * n + 4) // 9


def conjecture_bound(n: int) -> int:
    """floor((n+2)/6) at every order; below 2 the bound is vacuously violated."""
    return (n + 2) // 6


def leaf_block_lower_bound(g: Graph) -> int:
    """max(2, pendant block count): a certified lower bound on leaves.

    Every pendant block reaches the rest of the graph through a single
    bridge, so any spanning tree must place a degree-1 vertex inside it;
    and any tree on >= 2 vertices has at least two leaves.
    """
    if not is_connected(g):
        raise ValueError("leaf lower bound requires a connected graph")
    return max(2, block_cut_decomposition(g).pendant_block_count)


def _independent_sets_min_degree_sum(g: Graph, k: int, node_cap: int = 5_000_000):
    """Minimum degree sum over independent k-sets, or inf if none exists."""
    n = g.n
    degs = [len(a) for a in g.adj]
    best = [inf]
    nodes = [0]

    def rec(start: int, chosen: int, excluded: int, total: int):
        nodes[0] += 1
        if nodes[0] > node_cap:
            raise BudgetExceeded(f"sigma_{k} search exceeded {node_cap} nodes")
        if chosen == k:
            if total < best[0]:
                best[0] = total
            return
        for v in range(start, n):
            if excluded >> v & 1:
                continue
            rec(v + 1, chosen + 1, excluded | g.masks[v] | (1 << v), total + degs[v])

    rec(0, 0, 0, 0)
    return best[0]


def sigma_k(g: Graph, k: int):
    """Exact sigma_k; returns math.inf when no independent k-set exists."""
    if k < 1:
        raise ValueError(f"sigma_k needs k >= 1, got {k}")
    if g.n > SIGMA_EXACT_MAX_N and k > 1:
        raise BudgetExceeded(
            f"exact sigma_{k} restricted to n <= {SIGMA_EXACT_MAX_N}, got n={g.n}"
        )
    if k == 1:
        if g.n == 0:
            return inf
        return min(len(a) for a in g.adj)
    return _independent_sets_min_degree_sum(g, k)


def independence_number(g: Graph) -> int:
    """Exact maximum independent set size by branch and bound."""
    n = g.n
    if n > ALPHA_EXACT_MAX_N:
        raise BudgetExceeded(
            f"exact independence number restricted to n <= {ALPHA_EXACT_MAX_N}, got n={n}"
        )
    masks = g.masks
    best = [0]

    def rec(candidates: int, count: int):
        if candidates == 0:
            if count > best[0]:
                best[0] = count
            return
        if count + bin(candidates).count("1") <= best[0]:
            return
        # branch on a maximum-degree vertex inside the candidate set
        pick, pick_deg = -1, -1
        c = candidates
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            d = bin(masks[v] & candidates).count("1")
            if d > pick_deg:
                pick, pick_deg = v, d
        if pick_deg <= 1:
            # candidate subgraph is a matching plus isolated vertices:
            # taking the lowest vertex of each component is optimal
            take = 0
            c = candidates
            while c:
                v = (c & -c).bit_length() - 1
                c &= ~(masks[v] | (1 << v))
                take += 1
            if count + take > best[0]:
                best[0] = count + take
            return
        rec(candidates & ~(1 << pick), count)  # exclude
        rec(candidates & ~(masks[pick] | (1 << pick)), count + 1)  # include

    rec((1 << n) - 1 if n else 0, 0)
    return best[0]


def sufficient_k_ended(g: Graph) -> ConditionReport:
    """Evaluate the traceability and k-ended-tree sufficient conditions."""
    if not is_connected(g):
        raise ValueError("condition report requires a connected graph")
    n = g.n
    s2 = sigma_k(g, 2)
    alpha = independence_number(g)
    m = block_cut_decomposition(g).vertex_connectivity
    ore = s2 >= n - 1
    if s2 == inf:
        bt = 2
    else:
        bt = max(2, n + 1 - int(s2))
    bt = min(bt, max(2, n - 1))
    win = max(2, alpha - m + 1)
    return ConditionReport(
        graph_id=write_graph6(g),
        sigma2=s2,
        alpha=alpha,
        connectivity=m,
        ore_traceable=ore,
        bt_k_ended=bt,
        win_k_ended=win,
    )


def bondy_chvatal_closure(g: Graph, mode: str) -> Graph:
    """Iterated closure: join non-adjacent pairs whose degree sum meets the
    threshold (n for "cycle", n-1 for "path") until a fixpoint.

    The fixpoint is independent of the order in which pairs are added.
    """
    if mode == "cycle":
        threshold = g.n
    elif mode == "path":
        threshold = g.n - 1
    else:
        raise ValueError(f"mode must be 'path' or 'cycle', got {mode!r}")
    n = g.n
    masks = list(g.masks)
    deg = [bin(m).count("1") for m in masks]
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if not (masks[u] >> v & 1) and deg[u] + deg[v] >= threshold:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
                    deg[u] += 1
                    deg[v] += 1
                    changed = True
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if masks[u] >> v & 1
    ]
    return Graph(n, edges)
