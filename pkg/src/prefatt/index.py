"""Weighted sampling indexes for preferential attachment.

Every index stores (node id, mass) items and supports three operations the
generation loop needs per edge: draw a node with probability mass/total,
insert a new node, and raise an existing node's mass. Masses are
unnormalized weights, so an update touches one item and its ancestors
instead of the whole network.

The tree-backed kinds annotate each item with the total mass of its
subtree. A draw walks the tree in symmetric order: the left subtree covers
the first slice of the unit interval, the item itself the next slice, the
right subtree the rest. The walk therefore visits O(depth) items, and
because heavy items sit near the root of the heap-ordered kinds, the
expected depth seen by a draw is small.

Kinds:

    heap        implicit binary max-heap in a growable array, heap priority
                equals node mass, so the most probable node is at the root
    treap-rand  treap keyed by node id with uniform random priorities
    treap-mass  treap keyed by node id with priority equal to node mass
    naive       flat array with linear-scan draws (the reference oracle)
    array       constant-time repeated-entry table, valid only for linear
                preference with slope 1 and one shared constant fitness

All masses are 64-bit floats and must be non-negative; increments may only
raise a mass (monotone preference functions guarantee this in the models).
"""

from dataclasses import dataclass

import numpy as np

from .preference import ParameterError

INDEX_KINDS = ("heap", "treap-rand", "treap-mass", "naive", "array")

_PRIO_STREAM_TAG = 0x9E3779B9  # decorrelates priority draws from model draws


@dataclass
class ValidationReport:
    kind: str
    items: int
    max_relative_deviation: float
    sort_violations: int = 0
    priority_violations: int = 0

    @property
    def ok(self):
        return (
            self.max_relative_deviation < 1e-9
            and self.sort_violations == 0
            and self.priority_violations == 0
        )


def _relative_deviation(stored, recomputed):
    return abs(stored - recomputed) / max(abs(recomputed), 1.0)


class _SamplingIndex:
    """Shared surface of every index kind."""

    kind = None

    def sample(self, rng):
        """Draw a node id with probability node_mass / total_mass."""
        return self.sample_at(rng.uniform())

    def sample_at(self, u):
        raise NotImplementedError

    def most_probable(self):
        raise NotImplementedError(f"{self.kind} index does not track the most probable node")

    def __len__(self):
        return len(self._pos)

    def __contains__(self, node_id):
        return node_id in self._pos

    def _check_insert(self, node_id, mass):
        if node_id in self._pos:
            raise ValueError(f"node {node_id!r} already in index")
        if mass < 0:
            raise ValueError("mass must be non-negative")

    def _slot_for(self, node_id):
        slot = self._pos.get(node_id)
        if slot is None:
            raise ValueError(f"node {node_id!r} not in index")
        return slot

    def _check_increment(self, old, new):
        if new < old:
            raise ValueError(f"increment may not lower a mass ({old!r} -> {new!r})")

    def _require_sampleable(self):
        if len(self._pos) == 0:
            raise ValueError("cannot sample from an empty index")
        if self.total_mass <= 0.0:
            raise ValueError("cannot sample: total mass is zero")


class AugmentedHeap(_SamplingIndex):
    """Array-backed max-heap whose priorities are the node masses.

    Three parallel arrays hold the item payloads (id, mass) and the subtree
    mass of each position; a position map tracks where each node currently
    lives. Increments restore heap order by exchanging payloads with the
    parent while the parent is lighter. An exchange leaves the parent
    position's subtree set unchanged, so only the child position's subtree
    mass needs adjusting, and both fixups are constant time.

    Inserts append at the end and only add the new mass to the ancestors'
    subtree sums. There is no ordering pass: a fresh item may temporarily
    sit below a lighter parent. Draw correctness only needs the subtree
    sums, and the first increment that raises the item re-places it.
    """

    kind = "heap"

    def __init__(self):
        self._ids = []
        self._mass = []
        self._sub = []
        self._pos = {}

    @property
    def total_mass(self):
        return self._sub[0] if self._sub else 0.0

    def node_mass(self, node_id):
        return self._mass[self._slot_for(node_id)]

    def insert(self, node_id, mass):
        self._check_insert(node_id, mass)
        mass = float(mass)
        sub = self._sub
        pos = len(sub)
        self._ids.append(node_id)
        self._mass.append(mass)
        sub.append(mass)
        self._pos[node_id] = pos
        while pos > 0:
            pos = (pos - 1) >> 1
            sub[pos] += mass

    def increment(self, node_id, new_mass):
        pos = self._slot_for(node_id)
        mass = self._mass
        old = mass[pos]
        self._check_increment(old, new_mass)
        new_mass = float(new_mass)
        delta = new_mass - old
        sub = self._sub
        ids = self._ids
        posmap = self._pos
        mass[pos] = new_mass
        sub[pos] += delta
        # climb while the raised item outweighs its parent, exchanging payloads
        while pos > 0:
            par = (pos - 1) >> 1
            mp = mass[par]
            mi = mass[pos]
            if mp >= mi:
                break
            sub[par] += delta
            # the child position loses the heavy item and gains the parent's
            sub[pos] += mp - mi
            ii = ids[pos]
            ip = ids[par]
            mass[pos] = mp
            mass[par] = mi
            ids[pos] = ip
            ids[par] = ii
            posmap[ii] = par
            posmap[ip] = pos
            pos = par
        # remaining ancestors just absorb the extra mass
        while pos > 0:
            pos = (pos - 1) >> 1
            sub[pos] += delta

    def sample_at(self, u):
        self._require_sampleable()
        mass = self._mass
        sub = self._sub
        n = len(mass)
        t = u * sub[0]
        i = 0
        eta = 0.0
        while True:
            l = 2 * i + 1
            if l < n:
                s = eta + sub[l]
                if t < s:
                    i = l
                    continue
                eta = s
            eta += mass[i]
            if t < eta:
                return self._ids[i]
            r = 2 * i + 2
            if r >= n:
                # u landed beyond every interval by rounding; keep the last item
                return self._ids[i]
            i = r

    def most_probable(self):
        if not self._ids:
            raise ValueError("empty index")
        return self._ids[0]

    def validate(self):
        mass = self._mass
        sub = self._sub
        n = len(mass)
        worst = 0.0
        recomputed = [0.0] * n
        for i in range(n - 1, -1, -1):
            s = mass[i]
            l = 2 * i + 1
            if l < n:
                s += recomputed[l]
                r = l + 1
                if r < n:
                    s += recomputed[r]
            recomputed[i] = s
            dev = _relative_deviation(sub[i], s)
            if dev > worst:
                worst = dev
        return ValidationReport(self.kind, n, worst)


class Treap(_SamplingIndex):
    """Binary search tree over node ids, rebalanced by rotation on priority.

    priority='random' is the classical randomized treap: priorities are
    uniform draws fixed at insert time, so increments never rotate and only
    refresh subtree sums on the ancestor path.

    priority='mass' orders parents above children by node mass, with a
    per-item random key breaking ties. The tiebreak matters: constant
    fitness models give every fresh node the same mass, and with plain mass
    comparison those items would chain into a path hundreds of thousands of
    items deep. Increments rotate the item up while it outweighs its
    parent.

    Ids, masses, subtree sums, child/parent links, and priorities live in
    parallel arrays; slots are never moved, so rotations are pointer
    surgery plus two subtree-sum fixups.
    """

    kind = None

    def __init__(self, priority, seed=0):
        if priority not in ("random", "mass"):
            raise ParameterError(f"unknown treap priority {priority!r}")
        self.kind = "treap-rand" if priority == "random" else "treap-mass"
        self._by_mass = priority == "mass"
        self._ids = []
        self._mass = []
        self._sub = []
        self._left = []
        self._right = []
        self._parent = []
        self._prio = []
        self._pos = {}
        self._root = -1
        self._pgen = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence([int(seed), _PRIO_STREAM_TAG]))
        )
        self._pbuf = []
        self._pbuf_pos = 0

    @property
    def total_mass(self):
        return self._sub[self._root] if self._root >= 0 else 0.0

    def node_mass(self, node_id):
        return self._mass[self._slot_for(node_id)]

    def most_probable(self):
        # only the mass-ordered variant keeps the heaviest item at the root
        if not self._by_mass:
            raise NotImplementedError("most_probable needs mass-ordered priorities")
        self._require_sampleable()
        return self._ids[self._root]

    def _draw_priority(self):
        i = self._pbuf_pos
        buf = self._pbuf
        if i >= len(buf):
            buf = self._pgen.random(1024).tolist()
            self._pbuf = buf
            i = 0
        self._pbuf_pos = i + 1
        return buf[i]

    def _outranks(self, a, b):
        """True when slot a must sit above slot b."""
        if self._by_mass:
            ma = self._mass[a]
            mb = self._mass[b]
            if ma != mb:
                return ma > mb
        return self._prio[a] > self._prio[b]

    def _rotate_up(self, x):
        """Rotate slot x above its parent, keeping subtree sums exact."""
        left = self._left
        right = self._right
        parent = self._parent
        sub = self._sub
        mass = self._mass
        p = parent[x]
        g = parent[p]
        if left[p] == x:
            b = right[x]
            left[p] = b
            if b >= 0:
                parent[b] = p
            right[x] = p
        else:
            b = left[x]
            right[p] = b
            if b >= 0:
                parent[b] = p
            left[x] = p
        parent[p] = x
        parent[x] = g
        if g < 0:
            self._root = x
        elif left[g] == p:
            left[g] = x
        else:
            right[g] = x
        # x inherits p's old subtree set; p keeps itself plus remaining children
        sub[x] = sub[p]
        s = mass[p]
        lp = left[p]
        if lp >= 0:
            s += sub[lp]
        rp = right[p]
        if rp >= 0:
            s += sub[rp]
        sub[p] = s

    def insert(self, node_id, mass):
        self._check_insert(node_id, mass)
        mass = float(mass)
        slot = len(self._ids)
        self._ids.append(node_id)
        self._mass.append(mass)
        self._sub.append(mass)
        self._left.append(-1)
        self._right.append(-1)
        self._parent.append(-1)
        self._prio.append(self._draw_priority())
        self._pos[node_id] = slot
        if self._root < 0:
            self._root = slot
            return
        ids = self._ids
        left = self._left
        right = self._right
        sub = self._sub
        j = self._root
        while True:
            sub[j] += mass
            if node_id < ids[j]:
                nxt = left[j]
                if nxt < 0:
                    left[j] = slot
                    break
            else:
                nxt = right[j]
                if nxt < 0:
                    right[j] = slot
                    break
            j = nxt
        self._parent[slot] = j
        parent = self._parent
        while parent[slot] >= 0 and self._outranks(slot, parent[slot]):
            self._rotate_up(slot)

    def increment(self, node_id, new_mass):
        slot = self._slot_for(node_id)
        old = self._mass[slot]
        self._check_increment(old, new_mass)
        new_mass = float(new_mass)
        delta = new_mass - old
        self._mass[slot] = new_mass
        sub = self._sub
        parent = self._parent
        sub[slot] += delta
        j = parent[slot]
        while j >= 0:
            sub[j] += delta
            j = parent[j]
        if self._by_mass:
            while parent[slot] >= 0 and self._outranks(slot, parent[slot]):
                self._rotate_up(slot)

    def sample_at(self, u):
        self._require_sampleable()
        mass = self._mass
        sub = self._sub
        left = self._left
        right = self._right
        i = self._root
        t = u * sub[i]
        eta = 0.0
        while True:
            l = left[i]
            if l >= 0:
                s = eta + sub[l]
                if t < s:
                    i = l
                    continue
                eta = s
            eta += mass[i]
            if t < eta:
                return self._ids[i]
            r = right[i]
            if r < 0:
                return self._ids[i]
            i = r

    def validate(self):
        n = len(self._ids)
        if self._root < 0:
            return ValidationReport(self.kind, 0, 0.0)
        ids = self._ids
        mass = self._mass
        sub = self._sub
        left = self._left
        right = self._right
        parent = self._parent
        sort_violations = 0
        priority_violations = 0
        # heap order: every child must not outrank its parent
        for slot in range(n):
            p = parent[slot]
            if p >= 0 and self._outranks(slot, p):
                priority_violations += 1
        # sort order: symmetric-order walk must see strictly increasing ids
        stack = []
        i = self._root
        prev = None
        while stack or i >= 0:
            while i >= 0:
                stack.append(i)
                i = left[i]
            i = stack.pop()
            if prev is not None and not (prev < ids[i]):
                sort_violations += 1
            prev = ids[i]
            i = right[i]
        # subtree sums: children before parents
        recomputed = [0.0] * n
        worst = 0.0
        stack = [(self._root, False)]
        while stack:
            node, expanded = stack.pop()
            if not expanded:
                stack.append((node, True))
                if left[node] >= 0:
                    stack.append((left[node], False))
                if right[node] >= 0:
                    stack.append((right[node], False))
            else:
                s = mass[node]
                if left[node] >= 0:
                    s += recomputed[left[node]]
                if right[node] >= 0:
                    s += recomputed[right[node]]
                recomputed[node] = s
                dev = _relative_deviation(sub[node], s)
                if dev > worst:
                    worst = dev
        return ValidationReport(self.kind, n, worst, sort_violations, priority_violations)


class NaiveArray(_SamplingIndex):
    """Flat (id, mass) table with linear-scan draws.

    Every operation except sampling is constant time; a draw walks the
    whole table. This is the oracle the tree kinds are tested against, and
    the quadratic-time baseline in the benchmarks.
    """

    kind = "naive"

    def __init__(self):
        self._ids = []
        self._mass = []
        self._pos = {}
        self._total = 0.0

    @property
    def total_mass(self):
        return self._total

    def node_mass(self, node_id):
        return self._mass[self._slot_for(node_id)]

    def insert(self, node_id, mass):
        self._check_insert(node_id, mass)
        mass = float(mass)
        self._pos[node_id] = len(self._ids)
        self._ids.append(node_id)
        self._mass.append(mass)
        self._total += mass

    def increment(self, node_id, new_mass):
        slot = self._slot_for(node_id)
        old = self._mass[slot]
        self._check_increment(old, new_mass)
        new_mass = float(new_mass)
        self._mass[slot] = new_mass
        self._total += new_mass - old

    def sample_at(self, u):
        self._require_sampleable()
        t = u * self._total
        acc = 0.0
        last = 0
        mass = self._mass
        for i, m in enumerate(mass):
            acc += m
            if t < acc:
                return self._ids[i]
            if m > 0.0:
                last = i
        return self._ids[last]

    def validate(self):
        total = sum(self._mass)
        return ValidationReport(self.kind, len(self._ids), _relative_deviation(self._total, total))


class RepeatedEntryArray(_SamplingIndex):
    """Constant-time sampler for linear slope-1 preference with one shared fitness.

    Under mass(d) = d + fitness the weight splits into a degree part and a
    fitness part. The degree part is materialized as a table with one entry
    per degree unit, so a uniform entry is a degree-proportional draw; the
    fitness part is uniform over nodes. A single uniform picks the part and
    the element in O(1).

    Inserts and increments must keep integral degree deltas, which is what
    the slope-1 restriction guarantees; anything else is rejected.
    """

    kind = "array"

    def __init__(self, fitness):
        if fitness is None or fitness <= 0:
            raise ParameterError("array index needs the shared constant fitness (> 0)")
        self.fitness = float(fitness)
        self._order = []
        self._deg = []
        self._pos = {}
        self._entries = []

    @property
    def total_mass(self):
        return len(self._entries) + len(self._order) * self.fitness

    def node_mass(self, node_id):
        return self._deg[self._slot_for(node_id)] + self.fitness

    def _degree_units(self, amount, what):
        units = round(amount)
        if abs(amount - units) > 1e-9 or units < 0:
            raise ParameterError(
                f"array index only supports whole degree {what}s "
                f"(mass(d) = d + {self.fitness:g}); got {amount!r}"
            )
        return int(units)

    def insert(self, node_id, mass):
        self._check_insert(node_id, mass)
        units = self._degree_units(mass - self.fitness, "insert")
        self._pos[node_id] = len(self._order)
        self._order.append(node_id)
        self._deg.append(units)
        if units:
            self._entries.extend([node_id] * units)

    def increment(self, node_id, new_mass):
        slot = self._slot_for(node_id)
        old = self._deg[slot] + self.fitness
        self._check_increment(old, new_mass)
        units = self._degree_units(new_mass - old, "increment")
        if units:
            self._deg[slot] += units
            self._entries.extend([node_id] * units)

    def sample_at(self, u):
        self._require_sampleable()
        entries = self._entries
        t = u * self.total_mass
        ne = len(entries)
        if t < ne:
            return entries[int(t)]
        i = int((t - ne) / self.fitness)
        order = self._order
        if i >= len(order):
            i = len(order) - 1
        return order[i]

    def validate(self):
        counts = {}
        for node_id in self._entries:
            counts[node_id] = counts.get(node_id, 0) + 1
        worst = 0.0
        for node_id, slot in self._pos.items():
            dev = abs(counts.get(node_id, 0) - self._deg[slot])
            if dev > worst:
                worst = float(dev)
        return ValidationReport(self.kind, len(self._order), worst)


def make_index(kind, seed=0, fitness=None):
    """Build a sampling index by kind name (see INDEX_KINDS)."""
    if kind == "heap":
        return AugmentedHeap()
    if kind == "treap-rand":
        return Treap("random", seed)
    if kind == "treap-mass":
        return Treap("mass", seed)
    if kind == "naive":
        return NaiveArray()
    if kind == "array":
        return RepeatedEntryArray(fitness)
    raise ParameterError(f"unknown index kind {kind!r} (choose from {', '.join(INDEX_KINDS)})")
