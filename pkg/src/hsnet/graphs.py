"""Undirected simple graphs and the node classification used by the seeker.

Graphs are immutable after construction (nodes are 0..n-1, edges a frozenset
of sorted pairs), so every derived object in this module can be shared freely
across worker processes.

Besides the basic structure queries (components, induced subgraphs, node
removal, 2-connectivity) this module provides:

* ``classify`` -- partitions the nodes into singletons, singleton leaves,
  their attachment nodes, and the residual set, which is what the seeker's
  mixed strategy is built from;
* ``canonical_form`` -- an isomorphism-invariant key for small graphs, used
  to enumerate graphs up to isomorphism in the brute-force verifier.
"""

from __future__ import annotations

from dataclasses import dataclass

CANONICAL_MAX_NODES = 8


class GraphError(ValueError):
    """Structural violation: bad node ids, self loops, duplicate edges."""


class GraphFormatError(GraphError):
    """Parse failure in the text or JSON graph formats; carries a line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Undirected simple graph over nodes 0..node_count-1.

    Neighbor sets are precomputed as bitmasks; all queries are read-only.
    """

    __slots__ = ("node_count", "edges", "_masks")

    def __init__(self, node_count: int, edges=()):
        if node_count < 0:
            raise GraphError("node_count must be nonnegative")
        masks = [0] * node_count
        normalized = set()
        for e in edges:
            i, j = e
            if i == j:
                raise GraphError(f"self loop at node {i}")
            if not (0 <= i < node_count) or not (0 <= j < node_count):
                raise GraphError(f"edge ({i},{j}) out of range for n={node_count}")
            if i > j:
                i, j = j, i
            if (i, j) in normalized:
                raise GraphError(f"duplicate edge ({i},{j})")
            normalized.add((i, j))
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        self.node_count = node_count
        self.edges = frozenset(normalized)
        self._masks = tuple(masks)

    # -- queries ---------------------------------------------------------

    def neighbor_mask(self, i: int) -> int:
        return self._masks[i]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.node_count) if self._masks[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self._masks[i].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._masks)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self._masks[i] >> j & 1)

    def isolated_nodes(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.node_count) if self._masks[i] == 0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.node_count == other.node_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.node_count, self.edges))

    def __repr__(self):
        return f"Graph({self.node_count}, {self.sorted_edges()})"


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components as disjoint node sets covering all nodes."""

    components: tuple[frozenset, ...]
    component_of: tuple[int, ...]

    def size_of(self, node: int) -> int:
        return len(self.components[self.component_of[node]])

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)


def components(g: Graph) -> ComponentPartition:
    """Connected-component partition, components ordered by smallest member."""
    n = g.node_count
    comp_of = [-1] * n
    comps = []
    for start in range(n):
        if comp_of[start] >= 0:
            continue
        idx = len(comps)
        stack = [start]
        comp_of[start] = idx
        members = [start]
        while stack:
            v = stack.pop()
            m = g.neighbor_mask(v)
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if comp_of[w] < 0:
                    comp_of[w] = idx
                    members.append(w)
                    stack.append(w)
        comps.append(frozenset(members))
    return ComponentPartition(tuple(comps), tuple(comp_of))


def remove_node(g: Graph, k: int) -> tuple[Graph, dict[int, int]]:
    """Delete node k and its edges.

    Survivors keep their relative order and are renumbered 0..n-2; the
    old->new mapping is returned alongside so callers can track identities.
    """
    if not (0 <= k < g.node_count):
        raise GraphError(f"node {k} out of range")
    mapping = {}
    for v in range(g.node_count):
        if v != k:
            mapping[v] = len(mapping)
    edges = [
        (mapping[i], mapping[j]) for (i, j) in g.edges if i != k and j != k
    ]
    return Graph(g.node_count - 1, edges), mapping


def induced_subgraph(g: Graph, nodes) -> Graph:
    """Subgraph on ``nodes`` with exactly the internal edges, relabeled in
    sorted-node order."""
    order = sorted(set(nodes))
    for v in order:
        if not (0 <= v < g.node_count):
            raise GraphError(f"node {v} out of range")
    index = {v: i for i, v in enumerate(order)}
    edges = [
        (index[i], index[j]) for (i, j) in g.edges if i in index and j in index
    ]
    return Graph(len(order), edges)


def is_connected(g: Graph) -> bool:
    if g.node_count == 0:
        return False
    return len(components(g).components) == 1


def is_two_connected(g: Graph) -> bool:
    """True iff g has at least 3 nodes and stays connected after deleting any
    single node.  Graphs on <= 2 nodes are never considered 2-connected."""
    n = g.node_count
    if n < 3 or not is_connected(g):
        return False
    for k in range(n):
        h, _ = remove_node(g, k)
        if not is_connected(h):
            return False
    return True


# -- seeker-side node classification -------------------------------------


@dataclass(frozen=True)
class SeekerPartition:
    """Disjoint node classes driving the seeker's mixed strategy.

    singletons: degree-0 nodes.
    singleton_leaves: leaves whose (unique) neighbor has no other leaf.
    m_nodes: the attachment nodes of singleton leaves, one per leaf.
    r_nodes: everything else.  ``gr`` is the subgraph induced on r_nodes
    (gr node i corresponds to original id gr_nodes[i]); ``d_gr`` contains
    the r-nodes lying in 2-node components of gr.

    The classes are pairwise disjoint and cover all nodes, so
    ``len(r_nodes) == n - s - 2m`` always holds.
    """

    singletons: frozenset
    leaves: frozenset
    leaf_neighbor_count: tuple[int, ...]
    m_nodes: frozenset
    singleton_leaves: frozenset
    r_nodes: frozenset
    gr: Graph
    gr_nodes: tuple[int, ...]
    d_gr: frozenset

    @property
    def singleton_count(self) -> int:
        return len(self.singletons)

    @property
    def m_count(self) -> int:
        return len(self.m_nodes)

    @property
    def r_count(self) -> int:
        return len(self.r_nodes)


def classify(g: Graph) -> SeekerPartition:
    """Compute the seeker's node classification.

    A node joins ``m_nodes`` when it has exactly one leaf neighbor and is not
    itself a leaf; the non-leaf condition keeps the classes disjoint on
    2-node components (both endpoints of an isolated edge would otherwise
    count as attachment node and leaf at once).  Endpoints of isolated edges
    therefore land in ``r_nodes`` and, inside gr, in ``d_gr``.
    """
    n = g.node_count
    degrees = g.degrees()
    singletons = frozenset(i for i in range(n) if degrees[i] == 0)
    leaves = frozenset(i for i in range(n) if degrees[i] == 1)
    leaf_mask = 0
    for i in leaves:
        leaf_mask |= 1 << i
    lcount = tuple((g.neighbor_mask(i) & leaf_mask).bit_count() for i in range(n))
    m_nodes = frozenset(
        i for i in range(n) if lcount[i] == 1 and i not in leaves
    )
    singleton_leaves = frozenset(
        i for i in leaves if any(j in m_nodes for j in g.neighbors(i))
    )
    claimed = singletons | singleton_leaves | m_nodes
    r_nodes = frozenset(i for i in range(n) if i not in claimed)
    gr_nodes = tuple(sorted(r_nodes))
    gr = induced_subgraph(g, gr_nodes)
    gr_parts = components(gr)
    d_gr = frozenset(
        gr_nodes[i]
        for i in range(gr.node_count)
        if gr_parts.size_of(i) == 2
    )
    assert len(m_nodes) == len(singleton_leaves)
    assert len(r_nodes) == n - len(singletons) - 2 * len(m_nodes)
    return SeekerPartition(
        singletons=singletons,
        leaves=leaves,
        leaf_neighbor_count=lcount,
        m_nodes=m_nodes,
        singleton_leaves=singleton_leaves,
        r_nodes=r_nodes,
        gr=gr,
        gr_nodes=gr_nodes,
        d_gr=d_gr,
    )


# -- canonical forms for small graphs -------------------------------------


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key ``(node_count, bits)`` for graphs on at most
    CANONICAL_MAX_NODES nodes.

    The key packs the upper-triangular adjacency of the lexicographically
    best relabeling: vertices are placed one at a time and only placements
    maximizing the adjacency bits toward already-placed vertices survive.
    Ties are branched on (with interchangeable-twin pruning), so the result
    is a true maximum over all n! relabelings.
    """
    n = g.node_count
    if n > CANONICAL_MAX_NODES:
        raise GraphError(
            f"canonical_form supports at most {CANONICAL_MAX_NODES} nodes, got {n}"
        )
    if n <= 1:
        return (n, 0)
    masks = g._masks

    def prune_twins(cands):
        # Candidates u, w are interchangeable when swapping them is an
        # automorphism fixing everything else: N(u)\{w} == N(w)\{u}.
        kept = []
        for u in cands:
            dominated = False
            for w in kept:
                if masks[u] & ~(1 << w) == masks[w] & ~(1 << u):
                    dominated = True
                    break
            if not dominated:
                kept.append(u)
        return kept

    all_nodes = list(range(n))
    frontier = [(v,) for v in prune_twins(all_nodes)]
    key = 0
    offset = 0
    for level in range(1, n):
        best_bits = -1
        new_frontier = []
        for placed in frontier:
            used = 0
            for v in placed:
                used |= 1 << v
            cands = [v for v in all_nodes if not used >> v & 1]
            scored = []
            for v in cands:
                bits = 0
                mv = masks[v]
                for pos, p in enumerate(placed):
                    if mv >> p & 1:
                        bits |= 1 << pos
                scored.append((bits, v))
            top = max(b for b, _ in scored)
            if top < best_bits:
                continue
            tied = [v for b, v in scored if b == top]
            tied = prune_twins(tied)
            if top > best_bits:
                best_bits = top
                new_frontier = [placed + (v,) for v in tied]
            else:
                new_frontier.extend(placed + (v,) for v in tied)
        frontier = new_frontier
        key |= best_bits << offset
        offset += level
    return (n, key)


def graph_from_canonical_key(key: tuple[int, int]) -> Graph:
    """Rebuild the representative graph encoded by a canonical key."""
    n, bits = key
    edges = []
    offset = 0
    for i in range(1, n):
        row = bits >> offset & ((1 << i) - 1)
        for j in range(i):
            if row >> j & 1:
                edges.append((j, i))
        offset += i
    return Graph(n, edges)


# -- serialization ---------------------------------------------------------


def format_graph_text(g: Graph) -> str:
    """Bit-exact text form: ``n <count>`` then sorted ``e <i> <j>`` lines."""
    lines = [f"n {g.node_count}"]
    lines.extend(f"e {i} {j}" for i, j in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Parse the text format; raises GraphFormatError naming the bad line."""
    node_count = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if node_count is not None:
                raise GraphFormatError("repeated 'n' line", lineno)
            if len(parts) != 2:
                raise GraphFormatError("expected 'n <count>'", lineno)
            try:
                node_count = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"bad node count {parts[1]!r}", lineno)
            if node_count < 0:
                raise GraphFormatError("node count must be nonnegative", lineno)
        elif parts[0] == "e":
            if node_count is None:
                raise GraphFormatError("edge before 'n' line", lineno)
            if len(parts) != 3:
                raise GraphFormatError("expected 'e <i> <j>'", lineno)
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("edge endpoints must be integers", lineno)
            if not (0 <= i < j < node_count):
                raise GraphFormatError(
                    f"edge ({i},{j}) must satisfy 0 <= i < j < {node_count}", lineno
                )
            if (i, j) in seen:
                raise GraphFormatError(f"duplicate edge ({i},{j})", lineno)
            seen.add((i, j))
            edges.append((i, j))
        else:
            raise GraphFormatError(f"unknown directive {parts[0]!r}", lineno)
    if node_count is None:
        raise GraphFormatError("missing 'n' line", None)
    return Graph(node_count, edges)


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.node_count, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_json_dict(data: dict) -> Graph:
    try:
        n = data["n"]
        edges = data["edges"]
    except (TypeError, KeyError) as exc:
        raise GraphFormatError("expected object with 'n' and 'edges'") from exc
    if not isinstance(n, int):
        raise GraphFormatError("'n' must be an integer")
    pairs = []
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise GraphFormatError(f"bad edge entry {e!r}")
        pairs.append((int(e[0]), int(e[1])))
    return Graph(n, pairs)


def to_dot(g: Graph, roles: dict[int, str] | None = None) -> str:
    """DOT export; optional per-node role names become fill colors."""
    palette = {
        "core": "lightblue",
        "periphery": "palegreen",
        "orphan": "gold",
        "middle_orphan": "orange",
        "singleton": "lightgray",
    }
    lines = ["graph G {", "  node [style=filled, fillcolor=white];"]
    for v in range(g.node_count):
        role = (roles or {}).get(v)
        if role:
            color = palette.get(role, "white")
            lines.append(f'  {v} [fillcolor={color}, role="{role}"];')
        else:
            lines.append(f"  {v};")
    for i, j in g.sorted_edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
