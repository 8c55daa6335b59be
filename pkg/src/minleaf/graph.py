"""Immutable labelled simple graphs with graph6 I/O and bridge/block structure.

Vertices are dense integers 0..n-1.  Graph values never mutate after
construction, so they can be shared freely across worker processes; all
mutation in this package happens on spanning-tree values instead.

The graph6 codec follows the standard printable encoding: a header byte
(or '~' + 3 bytes for orders 63..258047) holding n+63, then the upper
triangle of the adjacency matrix read column by column, packed 6 bits per
byte, each byte offset by 63.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

GRAPH6_MAX_N = 258047


class Graph6Error(ValueError):
    """Malformed or unsupported graph6 record."""


class BudgetExceeded(RuntimeError):
    """An exact computation was asked for beyond its configured limits."""


class Graph:
    """Simple undirected graph: no loops, no parallel edges, labels 0..n-1."""

    __slots__ = ("n", "edges", "adj", "masks", "duplicate_edges_collapsed")

    def __init__(self, n: int, edges, duplicate_edges_collapsed: bool = False):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{u}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        adj = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "masks", tuple(masks))
        object.__setattr__(self, "duplicate_edges_collapsed", bool(duplicate_edges_collapsed))

    def __setattr__(self, name, value):
        raise AttributeError("Graph values are immutable")

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self.adj))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    cubic: bool


@dataclass(frozen=True)
class BlockCutStructure:
    """Bridges, 2-edge-connected blocks, and exact vertex connectivity."""

    bridges: frozenset
    blocks: tuple
    pendant_block_count: int
    vertex_connectivity: int


def from_edge_list(n: int, pairs) -> Graph:
    """Build a graph from explicit pairs; duplicates collapse with a flag set."""
    seen = set()
    duplicated = False
    for u, v in pairs:
        if u == v:
            raise ValueError(f"loop edge ({u},{u}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicated = True
        seen.add(key)
    return Graph(n, seen, duplicate_edges_collapsed=duplicated)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    reached = 1
    frontier = 1
    masks = g.masks
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= masks[v]
        frontier = nxt & ~reached
        reached |= frontier
    return reached == (1 << g.n) - 1


def validate(g: Graph) -> ValidationReport:
    """Report connectivity and 3-regularity; never raises."""
    cubic = g.n > 0 and all(len(a) == 3 for a in g.adj)
    return ValidationReport(connected=is_connected(g), cubic=cubic)


def _find_bridges(g: Graph) -> set:
    """Iterative lowpoint DFS; returns bridge edges as (min,max) pairs."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, -1, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                elif w != parent:
                    # simple graph: the single edge back to the parent is the
                    # tree edge and is the only one skipped
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        bridges.add((min(p, v), max(p, v)))
        # restore nothing; disc/low persist across roots
    return bridges


def _articulation_exists(g: Graph) -> bool:
    n = g.n
    if n <= 2:
        return False
    disc = [-1] * n
    low = [0] * n
    timer = 0
    root = 0
    root_children = 0
    found = False
    stack = [(root, -1, iter(g.adj[root]))]
    disc[root] = low[root] = timer
    timer += 1
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                if v == root:
                    root_children += 1
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            elif w != parent and disc[w] < low[v]:
                low[v] = disc[w]
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= disc[p]:
                    found = True
    return found or root_children > 1


def _connected_without(g: Graph, removed_mask: int) -> bool:
    """Is g minus the masked vertices connected (and nonempty)?"""
    alive = ((1 << g.n) - 1) & ~removed_mask
    if alive == 0:
        return False
    start = (alive & -alive).bit_length() - 1
    reached = 1 << start
    frontier = reached
    masks = g.masks
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= masks[v]
        frontier = nxt & alive & ~reached
        reached |= frontier
    return reached == alive


def _vertex_connectivity(g: Graph) -> int:
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    if _articulation_exists(g):
        return 1
    delta = min(len(a) for a in g.adj)
    for k in range(2, n - 1):
        count = 1
        for i in range(k):
            count = count * (n - i) // (i + 1)
        if count > 2_000_000:
            raise BudgetExceeded(
                f"vertex connectivity brute force too large: C({n},{k})"
            )
        for cut in combinations(range(n), k):
            mask = 0
            for v in cut:
                mask |= 1 << v
            if not _connected_without(g, mask):
                return k
        if k >= delta:
            # removing all neighbours of a minimum-degree vertex always
            # disconnects a non-complete graph, so the loop ends by here
            break
    return delta


def block_cut_decomposition(g: Graph) -> BlockCutStructure:
    """Bridges, 2-edge-connected blocks, pendant-block count, connectivity.

    Pendant blocks are the degree-1 nodes of the tree obtained by
    contracting every 2-edge-connected component; each one forces a leaf in
    any spanning tree, which is the basis of the solver's lower bound.
    """
    if not is_connected(g):
        raise ValueError("block/cut decomposition requires a connected graph")
    bridges = _find_bridges(g)
    n = g.n
    # components after deleting bridges
    comp = [-1] * n
    ncomp = 0
    for s in range(n):
        if comp[s] != -1:
            continue
        comp[s] = ncomp
        queue = [s]
        while queue:
            v = queue.pop()
            for w in g.adj[v]:
                e = (min(v, w), max(v, w))
                if e in bridges or comp[w] != -1:
                    continue
                comp[w] = ncomp
                queue.append(w)
        ncomp += 1
    block_edges = [[] for _ in range(ncomp)]
    for u, v in g.edges:
        if (u, v) not in bridges:
            block_edges[comp[u]].append((u, v))
    blocks = tuple(frozenset(b) for b in block_edges if b)
    if bridges:
        deg = [0] * ncomp
        for u, v in bridges:
            deg[comp[u]] += 1
            deg[comp[v]] += 1
        pendant = sum(1 for d in deg if d == 1)
    else:
        pendant = 0
    return BlockCutStructure(
        bridges=frozenset(bridges),
        blocks=blocks,
        pendant_block_count=pendant,
        vertex_connectivity=_vertex_connectivity(g),
    )


# --- graph6 codec -----------------------------------------------------------

def _g6_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= GRAPH6_MAX_N:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise Graph6Error(f"order {n} beyond graph6 support (max {GRAPH6_MAX_N})")


def write_graph6(g: Graph) -> str:
    """Encode to one graph6 record (no trailing newline)."""
    n = g.n
    out = bytearray(_g6_header(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text) -> Graph:
    """Decode one graph6 record (str or bytes, optional '>>graph6<<' prefix)."""
    if isinstance(text, str):
        data = text.encode("ascii", errors="replace")
    else:
        data = bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 record")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte value {b} outside graph6 range [63,126]")
    if data[0] == 126:
        if len(data) < 4:
            raise Graph6Error("truncated extended-order header")
        if data[1] == 126:
            raise Graph6Error("orders beyond 258047 not supported")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        payload = data[4:]
    else:
        n = data[0] - 63
        payload = data[1:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(payload) != nbytes:
        raise Graph6Error(
            f"payload holds {len(payload)} bytes, expected {nbytes} for n={n}"
        )
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[bit // 6] - 63
            if byte >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    # padding bits of the final byte must be zero in a well-formed record
    if nbits % 6:
        tail = payload[-1] - 63
        if tail & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("nonzero padding bits in final payload byte")
    return Graph(n, edges)


# --- edge-list text format ---------------------------------------------------

def write_edge_list(g: Graph) -> str:
    """Text form: first line "n m", then one "u v" line per edge."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        u, v = ln.split()
        pairs.append((int(u), int(v)))
    return from_edge_list(n, pairs)
