"""Directed multigraph tuned for append-only growth.

Nodes are dense integer ids in insertion order. Degree counters, fitness
values, and running maxima live in parallel lists; edges can be retained in
memory, streamed to a sink as they appear, or both. Degree histograms come
from the counters, so they are identical whether or not edges were kept.

Self-loops and parallel edges are permitted. Per-node self-loop counts are
tracked (sparsely) because "number of edges incident to a node" and "total
degree" differ exactly by the self-loop count.
"""

from array import array
from collections import Counter, namedtuple

NodeRecord = namedtuple("NodeRecord", "node_id in_degree out_degree fitness_in fitness_out")


class Graph:
    def __init__(self, keep_edges=True, edge_sink=None):
        """keep_edges retains (tail, head) pairs in memory; edge_sink, if
        given, is a writable text file that receives one 'tail<TAB>head'
        line per edge as it is added."""
        self.in_degrees = []
        self.out_degrees = []
        self.fitness_in = []
        self.fitness_out = []
        self.n_edges = 0
        self.max_in_degree = 0
        self.max_out_degree = 0
        self.max_total_degree = 0
        self.self_loops = {}
        self._tails = array("q") if keep_edges else None
        self._heads = array("q") if keep_edges else None
        self._sink = edge_sink

    @property
    def n_nodes(self):
        return len(self.in_degrees)

    def __len__(self):
        return self.n_nodes

    def add_node(self, fitness_in=0.0, fitness_out=0.0):
        """Append an isolated node; returns its id."""
        node_id = len(self.in_degrees)
        self.in_degrees.append(0)
        self.out_degrees.append(0)
        self.fitness_in.append(fitness_in)
        self.fitness_out.append(fitness_out)
        return node_id

    def add_edge(self, tail, head):
        n = len(self.in_degrees)
        if not (0 <= tail < n and 0 <= head < n):
            raise ValueError(f"edge ({tail}, {head}) references a missing node")
        ind = self.in_degrees
        outd = self.out_degrees
        ind[head] += 1
        outd[tail] += 1
        self.n_edges += 1
        if tail == head:
            self.self_loops[tail] = self.self_loops.get(tail, 0) + 1
        d = ind[head]
        if d > self.max_in_degree:
            self.max_in_degree = d
        d = outd[tail]
        if d > self.max_out_degree:
            self.max_out_degree = d
        t = ind[head] + outd[head]
        if t > self.max_total_degree:
            self.max_total_degree = t
        t = ind[tail] + outd[tail]
        if t > self.max_total_degree:
            self.max_total_degree = t
        if self._tails is not None:
            self._tails.append(tail)
            self._heads.append(head)
        if self._sink is not None:
            self._sink.write(f"{tail}\t{head}\n")

    def node(self, node_id):
        if not 0 <= node_id < len(self.in_degrees):
            raise ValueError(f"no node {node_id!r}")
        return NodeRecord(
            node_id,
            self.in_degrees[node_id],
            self.out_degrees[node_id],
            self.fitness_in[node_id],
            self.fitness_out[node_id],
        )

    def edges(self):
        """Iterate retained (tail, head) pairs."""
        if self._tails is None:
            raise ValueError("edges were not retained for this graph")
        return zip(self._tails, self._heads)

    def incident_edges(self, node_id):
        """Number of edges touching the node; a self-loop counts once."""
        return (
            self.in_degrees[node_id]
            + self.out_degrees[node_id]
            - self.self_loops.get(node_id, 0)
        )

    def degree_histogram(self, which="in"):
        """Map degree -> node count for 'in', 'out', or 'total' degrees."""
        if which == "in":
            return dict(Counter(self.in_degrees))
        if which == "out":
            return dict(Counter(self.out_degrees))
        if which == "total":
            return dict(Counter(i + o for i, o in zip(self.in_degrees, self.out_degrees)))
        raise ValueError(f"which must be 'in', 'out', or 'total', not {which!r}")
