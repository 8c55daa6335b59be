"""Spanning-tree values, leaf statistics, and leaf-reducing edge swaps.

A spanning tree on a cubic host has maximum degree 3, so its vertices split
into the degree classes counted by LeafStats: k leaves, n1 degree-2
vertices, p degree-3 vertices.  For any tree with maximum degree <= 3 the
identity k = p + 2 holds, and the module asserts it whenever it applies.

The central move is `adjacent_leaf_move`: given a tree with k >= 3 leaves
two of which are adjacent in the host, adding that host edge and deleting a
well-chosen edge of the resulting cycle always yields a spanning tree with
at most k - 1 leaves.  `reduce_leaves` in the heuristic module drives this
move together with general fundamental-cycle swaps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class LeafStats:
    """Degree-class counts of a spanning tree: k + n1 + p = n on cubic hosts."""

    k: int
    n1: int
    p: int
    leaf_set: frozenset


class SpanningTree:
    """An acyclic connected spanning edge subset of a host graph."""

    __slots__ = ("host", "edges", "deg", "adj")

    def __init__(self, host: Graph, edges, _trusted: bool = False):
        norm = tuple(sorted((u, v) if u < v else (v, u) for u, v in edges))
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "edges", frozenset(norm))
        n = host.n
        deg = [0] * n
        adj = [[] for _ in range(n)]
        for u, v in norm:
            deg[u] += 1
            deg[v] += 1
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "deg", tuple(deg))
        object.__setattr__(self, "adj", tuple(tuple(a) for a in adj))
        if not _trusted:
            self._check()

    def _check(self):
        n = self.host.n
        if len(self.edges) != max(n - 1, 0):
            raise ValueError(
                f"spanning tree needs {n - 1} edges, got {len(self.edges)}"
            )
        for u, v in self.edges:
            if not self.host.has_edge(u, v):
                raise ValueError(f"tree edge ({u},{v}) is not a host edge")
        # n-1 edges + acyclic via union-find implies spanning and connected
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError("tree edges contain a cycle")
            parent[ru] = rv

    def __setattr__(self, name, value):
        raise AttributeError("SpanningTree values are immutable")

    def leaf_count(self) -> int:
        return sum(1 for d in self.deg if d == 1)

    def __eq__(self, other):
        return (
            isinstance(other, SpanningTree)
            and self.host == other.host
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.host.n, self.edges))

    def __repr__(self):
        return f"SpanningTree(n={self.host.n}, leaves={self.leaf_count()})"


def leaf_stats(t: SpanningTree) -> LeafStats:
    """Count leaves, degree-2 and degree-3 vertices of the tree."""
    k = n1 = p = 0
    leaves = []
    for v, d in enumerate(t.deg):
        if d == 1:
            k += 1
            leaves.append(v)
        elif d == 2:
            n1 += 1
        elif d == 3:
            p += 1
    if t.host.n >= 2 and max(t.deg) <= 3:
        assert k == p + 2, f"degree-bounded tree broke k=p+2: k={k}, p={p}"
    return LeafStats(k=k, n1=n1, p=p, leaf_set=frozenset(leaves))


def tree_path(t: SpanningTree, u: int, v: int) -> list[int]:
    """The unique tree path from u to v, endpoints included."""
    prev = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for y in t.adj[x]:
            if y not in prev:
                prev[y] = x
                stack.append(y)
    path = [v]
    while path[-1] != u:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def fundamental_cycle(t: SpanningTree, e) -> list[int]:
    """Vertices of the unique cycle of t + e, listed from one endpoint of e
    to the other along the tree path."""
    u, v = e
    key = (u, v) if u < v else (v, u)
    if not t.host.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not a host edge")
    if key in t.edges:
        raise ValueError(f"({u},{v}) is already a tree edge")
    return tree_path(t, u, v)


def edge_swap(t: SpanningTree, add, remove) -> SpanningTree:
    """Exchange one non-tree host edge for an edge on its fundamental cycle."""
    cycle = fundamental_cycle(t, add)
    cycle_edges = set()
    for a, b in zip(cycle, cycle[1:]):
        cycle_edges.add((a, b) if a < b else (b, a))
    ru, rv = remove
    rkey = (ru, rv) if ru < rv else (rv, ru)
    if rkey not in cycle_edges:
        raise ValueError(
            f"removed edge ({ru},{rv}) is not on the fundamental cycle of {add}"
        )
    au, av = add
    akey = (au, av) if au < av else (av, au)
    new_edges = (t.edges - {rkey}) | {akey}
    return SpanningTree(t.host, new_edges, _trusted=True)


def leaves_independent(t: SpanningTree) -> bool:
    """True iff no two leaves of the tree are adjacent in the host graph."""
    leaves = [v for v, d in enumerate(t.deg) if d == 1]
    for i, u in enumerate(leaves):
        mu = t.host.masks[u]
        for v in leaves[i + 1:]:
            if mu >> v & 1:
                return False
    return True


def adjacent_leaf_move(t: SpanningTree) -> SpanningTree | None:
    """Reduce the leaf count by joining two host-adjacent leaves.

    Requires k >= 3 (for a 2-leaf tree the adjacent ends close a
    Hamiltonian cycle, not a smaller tree).  Returns None when no two
    leaves are host-adjacent; otherwise returns a tree with <= k-1 leaves,
    found by scanning every cycle edge whose removal keeps a spanning tree
    and keeping the best.
    """
    stats = leaf_stats(t)
    if stats.k < 3:
        raise ValueError(f"adjacent-leaf move needs k >= 3 leaves, tree has {stats.k}")
    leaves = sorted(stats.leaf_set)
    pair = None
    for i, u in enumerate(leaves):
        for v in leaves[i + 1:]:
            if t.host.has_edge(u, v) and ((u, v) not in t.edges):
                pair = (u, v)
                break
        if pair:
            break
    if pair is None:
        return None
    u, v = pair
    cycle = tree_path(t, u, v)
    deg = t.deg
    k = stats.k
    best = None
    best_count = None
    for a, b in zip(cycle, cycle[1:]):
        # degrees after adding uv and removing ab; a or b may coincide with u, v
        new_deg = {u: deg[u] + 1, v: deg[v] + 1}
        new_deg[a] = new_deg.get(a, deg[a]) - 1
        new_deg[b] = new_deg.get(b, deg[b]) - 1
        count = k
        for w, nd in new_deg.items():
            if deg[w] == 1 and nd != 1:
                count -= 1
            elif deg[w] != 1 and nd == 1:
                count += 1
        if best_count is None or count < best_count:
            best_count = count
            best = (a, b)
    result = edge_swap(t, (u, v), best)
    assert result.leaf_count() <= k - 1, "adjacent-leaf move failed to reduce leaves"
    return result


class TreeEnumeration:
    """Stream of every spanning tree of a connected host, each exactly once.

    Iteration stops after `cap` trees and then sets `truncated`.  The
    default cap keeps exhaustive audits from running away; pass a larger
    one explicitly if a graph genuinely needs it.
    """

    DEFAULT_CAP = 10_000_000

    def __init__(self, graph: Graph, cap: int | None = None):
        from .graph import is_connected

        if not is_connected(graph):
            raise ValueError("spanning-tree enumeration requires a connected graph")
        self.graph = graph
        self.cap = self.DEFAULT_CAP if cap is None else cap
        self.truncated = False
        self.count = 0

    def __iter__(self):
        g = self.graph
        n = g.n
        if n == 0:
            return
        if n == 1:
            if self.cap >= 1:
                self.count = 1
                yield SpanningTree(g, (), _trusted=True)
            else:
                self.truncated = True
            return
        avail = list(g.masks)  # host edges still usable, as vertex masks
        parent = list(range(n))
        size = [1] * n

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        chosen: list[tuple[int, int]] = []
        all_edges = list(g.edges)

        def connected_now() -> bool:
            # connectivity of chosen + avail edges
            reached = 1
            frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= avail[v]
                frontier = nxt & ~reached
                reached |= frontier
            return reached == (1 << n) - 1

        def emit():
            self.count += 1
            return SpanningTree(g, list(chosen), _trusted=True)

        def rec():
            if self.count >= self.cap:
                self.truncated = True
                return
            if len(chosen) == n - 1:
                yield emit()
                return
            # smallest usable edge joining two different components
            pick = None
            for u, v in all_edges:
                if not (avail[u] >> v & 1):
                    continue
                if (u, v) in chosen_set:
                    continue
                if find(u) != find(v):
                    pick = (u, v)
                    break
            if pick is None:
                return
            u, v = pick
            # include branch
            ru, rv = find(u), find(v)
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            chosen.append(pick)
            chosen_set.add(pick)
            yield from rec()
            chosen.pop()
            chosen_set.remove(pick)
            parent[rv] = rv
            size[ru] -= size[rv]
            # exclude branch, only if the rest stays connected
            avail[u] &= ~(1 << v)
            avail[v] &= ~(1 << u)
            if connected_now():
                yield from rec()
            avail[u] |= 1 << v
            avail[v] |= 1 << u

        chosen_set: set[tuple[int, int]] = set()
        yield from rec()


def enumerate_spanning_trees(g: Graph, cap: int | None = None) -> TreeEnumeration:
    """Convenience wrapper returning the iterable enumeration stream."""
    return TreeEnumeration(g, cap=cap)


def spanning_tree_count(g: Graph) -> int:
    """Exact spanning-tree count via the Laplacian minor determinant.

    Uses fraction-free (Bareiss) elimination over the integers, so the
    result is exact at any size this package handles.
    """
    n = g.n
    if n == 0:
        return 0
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    m = [row[1:] for row in lap[1:]]
    size = n - 1
    prev = 1
    sign = 1
    for col in range(size - 1):
        if m[col][col] == 0:
            for r in range(col + 1, size):
                if m[r][col] != 0:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(col + 1, size):
            for c in range(col + 1, size):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
        prev = m[col][col]
    return sign * m[size - 1][size - 1]


# --- text serialization -------------------------------------------------------

def tree_text(t: SpanningTree) -> str:
    """Host graph6 line followed by sorted "u v" edge lines."""
    from .graph import write_graph6

    lines = [write_graph6(t.host)]
    lines.extend(f"{u} {v}" for u, v in sorted(t.edges))
    return "\n".join(lines) + "\n"


def parse_tree_text(text: str) -> SpanningTree:
    from .graph import parse_graph6

    lines = [ln for ln in text.splitlines() if ln.strip()]
    host = parse_graph6(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return SpanningTree(host, edges)
