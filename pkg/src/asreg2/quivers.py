"""Quivers attached to the graded algebra and its skew group algebra.

Q_S has vertices 0..ell-1 with an x-arrow i -> i+w_x and a y-arrow
i -> i+w_y whenever the target is below ell; with coprime weights its
underlying graph is a single cycle.  Q_{S,G} lifts each x-arrow to
(i, j-1) -> (i', j) and each y-arrow to (i, j+1) -> (i', j) over j mod r.
The c-fold covering quiver lifts x-arrows with a level shift of ax and
y-arrows with a shift of ay where (ax, ay) is the Bezout pair
w_y*ax - w_x*ay = 1 with 0 <= ax < w_x; for w_x = 1 this is the familiar
picture of c stacked copies with the y-arrows dropping one level (and
wrapping), and in general it is the connected cyclic cover, which is what
the skew-quiver components decompose into.

Vertices are strings ("v3" or "v1_2"); arrows are (src, dst, tag) with
tag "x", "y" or "" for untagged.  Quiver values are immutable.
"""

from collections import Counter, deque


def _natural_key(label):
    key = []
    num = ""
    for ch in label:
        if ch.isdigit():
            num += ch
        else:
            if num:
                key.append(int(num))
                num = ""
            key.append(ch)
    if num:
        key.append(int(num))
    return tuple((0, p) if isinstance(p, int) else (1, p) for p in key)


class Quiver:
    __slots__ = ("vertices", "arrows")

    def __init__(self, vertices, arrows):
        self.vertices = tuple(sorted(vertices, key=_natural_key))
        vs = set(self.vertices)
        for (s, t, _) in arrows:
            if s not in vs or t not in vs:
                raise ValueError("arrow endpoint %r not among the vertices" % ((s, t),))
        self.arrows = tuple(
            sorted(arrows, key=lambda a: (_natural_key(a[0]), _natural_key(a[1]), a[2]))
        )

    def __eq__(self, other):
        return self.vertices == other.vertices and self.arrows == other.arrows

    __hash__ = None

    def __repr__(self):
        return "Quiver(%d vertices, %d arrows)" % (len(self.vertices), len(self.arrows))

    def out_arrows(self, v):
        return [a for a in self.arrows if a[0] == v]

    def in_arrows(self, v):
        return [a for a in self.arrows if a[1] == v]

    def is_sink(self, v):
        return not self.out_arrows(v) and bool(self.in_arrows(v))

    def is_source(self, v):
        return not self.in_arrows(v) and bool(self.out_arrows(v))

    def sinks(self):
        return [v for v in self.vertices if self.is_sink(v)]

    def sources(self):
        return [v for v in self.vertices if self.is_source(v)]

    def is_acyclic(self):
        indeg = {v: 0 for v in self.vertices}
        for (_, t, _) in self.arrows:
            indeg[t] += 1
        queue = deque(v for v in self.vertices if indeg[v] == 0)
        seen = 0
        adj = {v: [] for v in self.vertices}
        for (s, t, _) in self.arrows:
            adj[s].append(t)
        while queue:
            v = queue.popleft()
            seen += 1
            for t in adj[v]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
        return seen == len(self.vertices)

    def degree_signature(self, v, tags=False):
        if tags:
            outs = Counter(a[2] for a in self.out_arrows(v))
            ins = Counter(a[2] for a in self.in_arrows(v))
            return (tuple(sorted(outs.items())), tuple(sorted(ins.items())))
        return (len(self.out_arrows(v)), len(self.in_arrows(v)))


def quiver_qs(spec):
    ell = spec.ell
    vertices = ["v%d" % i for i in range(ell)]
    arrows = []
    for i in range(ell):
        if i + spec.w_x < ell:
            arrows.append(("v%d" % i, "v%d" % (i + spec.w_x), "x"))
        if i + spec.w_y < ell:
            arrows.append(("v%d" % i, "v%d" % (i + spec.w_y), "y"))
    return Quiver(vertices, arrows)


def quiver_qsg(spec, r):
    if r < 1:
        raise ValueError("group order must be >= 1")
    if r == 1:
        return quiver_qs(spec)
    ell = spec.ell
    vertices = ["v%d_%d" % (i, j) for i in range(ell) for j in range(r)]
    arrows = []
    for i in range(ell):
        for (w, tag, shift) in ((spec.w_x, "x", -1), (spec.w_y, "y", +1)):
            if i + w >= ell:
                continue
            for j in range(r):
                arrows.append(("v%d_%d" % (i, (j + shift) % r), "v%d_%d" % (i + w, j), tag))
    return Quiver(vertices, arrows)


def _cover_shifts(spec):
    """Bezout pair (ax, ay) with w_y*ax - w_x*ay = 1 and 0 <= ax < w_x."""
    if spec.w_x == 1:
        return 0, -1
    ax = pow(spec.w_y, -1, spec.w_x)
    ay = (spec.w_y * ax - 1) // spec.w_x
    return ax, ay


def covering_quiver(spec, c):
    if c < 1:
        raise ValueError("covering degree must be >= 1")
    if c == 1:
        return quiver_qs(spec)
    ell = spec.ell
    ax, ay = _cover_shifts(spec)
    vertices = ["v%d_%d" % (i, s) for i in range(ell) for s in range(c)]
    arrows = []
    for i in range(ell):
        for (w, tag, shift) in ((spec.w_x, "x", ax), (spec.w_y, "y", ay)):
            if i + w >= ell:
                continue
            for s in range(c):
                arrows.append(("v%d_%d" % (i, s), "v%d_%d" % (i + w, (s + shift) % c), tag))
    return Quiver(vertices, arrows)


def components(q):
    """Weakly connected components, ordered by size then vertex labels."""
    adj = {v: set() for v in q.vertices}
    for (s, t, _) in q.arrows:
        adj[s].add(t)
        adj[t].add(s)
    seen = set()
    comps = []
    for v in q.vertices:
        if v in seen:
            continue
        block = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in block:
                    block.add(w)
                    queue.append(w)
        seen |= block
        arrows = [a for a in q.arrows if a[0] in block]
        comps.append(Quiver(sorted(block, key=_natural_key), arrows))
    comps.sort(key=lambda c: (len(c.vertices), [_natural_key(v) for v in c.vertices]))
    return comps


def quiver_isomorphic(q1, q2, respect_tags=False):
    """A vertex bijection preserving arrows (and tags when asked), or None."""
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return None
    c1, c2 = components(q1), components(q2)
    if len(c1) != len(c2):
        return None
    mapping = {}
    used = [False] * len(c2)

    def place(idx):
        if idx == len(c1):
            return True
        comp = c1[idx]
        for k, cand in enumerate(c2):
            if used[k] or len(cand.vertices) != len(comp.vertices):
                continue
            sub = _component_isomorphism(comp, cand, respect_tags)
            if sub is not None:
                used[k] = True
                mapping.update(sub)
                if place(idx + 1):
                    return True
                used[k] = False
                for v in sub:
                    mapping.pop(v, None)
        return False

    if not place(0):
        return None
    return mapping


def _adjacency(q, tags):
    out = {v: Counter() for v in q.vertices}
    for (s, t, tag) in q.arrows:
        out[s][(t, tag if tags else "")] += 1
    return out


def _component_isomorphism(q1, q2, respect_tags):
    n = len(q1.vertices)
    sig1 = {v: q1.degree_signature(v, respect_tags) for v in q1.vertices}
    sig2 = {v: q2.degree_signature(v, respect_tags) for v in q2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    adj1 = _adjacency(q1, respect_tags)
    adj2 = _adjacency(q2, respect_tags)

    # explore q1 in a connected order so each new vertex is constrained
    order = []
    seen = set()
    und = {v: set() for v in q1.vertices}
    for (s, t, _) in q1.arrows:
        und[s].add(t)
        und[t].add(s)
    start = min(q1.vertices, key=lambda v: (sig1[v], _natural_key(v)))
    queue = deque([start])
    seen.add(start)
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in sorted(und[v], key=_natural_key):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    assert len(order) == n

    mapping = {}
    taken = set()

    def consistent(v, w):
        # all arrows between v and already-mapped vertices must match
        for (other, tag), mult in adj1[v].items():
            if other in mapping and adj2[w][(mapping[other], tag)] != mult:
                return False
        for u in mapping:
            for (other, tag), mult in adj1[u].items():
                if other == v and adj2[mapping[u]][(w, tag)] != mult:
                    return False
        return True

    def extend(i):
        if i == n:
            return True
        v = order[i]
        for w in q2.vertices:
            if w in taken or sig2[w] != sig1[v]:
                continue
            if not consistent(v, w):
                continue
            mapping[v] = w
            taken.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            taken.discard(w)
        return False

    if extend(0):
        return dict(mapping)
    return None


def bgp_reflect(q, v):
    """Reverse every arrow at a sink or source vertex."""
    if v not in q.vertices:
        raise ValueError("unknown vertex %r" % v)
    if not (q.is_sink(v) or q.is_source(v)):
        raise ValueError("vertex %r is neither a sink nor a source" % v)
    arrows = []
    for (s, t, tag) in q.arrows:
        if s == v or t == v:
            arrows.append((t, s, tag))
        else:
            arrows.append((s, t, tag))
    return Quiver(q.vertices, arrows)


def canonical_type(q):
    """Direction counts (i, j), i <= j, for an acyclic single-cycle quiver."""
    n = len(q.vertices)
    if len(q.arrows) != n or n < 2:
        raise ValueError("underlying graph is not a single cycle")
    if len(components(q)) != 1:
        raise ValueError("underlying graph is not connected")
    incident = {v: [] for v in q.vertices}
    for idx, (s, t, _) in enumerate(q.arrows):
        incident[s].append(idx)
        incident[t].append(idx)
    if any(len(e) != 2 for e in incident.values()):
        raise ValueError("underlying graph is not a single cycle")
    if not q.is_acyclic():
        raise ValueError("quiver has an oriented cycle")
    start = q.vertices[0]
    edge = incident[start][0]
    v = start
    forward = backward = 0
    for _ in range(n):
        s, t, _tag = q.arrows[edge]
        if s == v:
            forward += 1
            v = t
        else:
            backward += 1
            v = s
        nxt = [e for e in incident[v] if e != edge]
        edge = nxt[0]
    if v != start:
        raise ValueError("underlying graph is not a single cycle")
    return (min(forward, backward), max(forward, backward))


def make_canonical_quiver(i, j):
    """Two directed paths of lengths i and j from a common source to a common sink."""
    if i < 1 or j < 1:
        raise ValueError("path lengths must be >= 1")
    source, sink = "v0", "v%d" % i
    vertices = ["v%d" % k for k in range(i + j)]
    arrows = []
    prev = source
    for k in range(1, i):
        arrows.append((prev, "v%d" % k, ""))
        prev = "v%d" % k
    arrows.append((prev, sink, ""))
    prev = source
    for k in range(i + 1, i + j):
        arrows.append((prev, "v%d" % k, ""))
        prev = "v%d" % k
    arrows.append((prev, sink, ""))
    return Quiver(vertices, arrows)


def _untagged(q):
    return Quiver(q.vertices, [(s, t, "") for (s, t, _) in q.arrows])


def _state_invariant(q):
    return tuple(sorted(q.degree_signature(v) for v in q.vertices))


def reflection_search(q1, q2, max_depth=None):
    """Breadth-first search for a reflection sequence turning q1 into q2.

    States are explored modulo untagged isomorphism; the returned witness is
    a list of vertex labels of q1 (labels are stable under reflection), or
    None when the depth bound is exhausted.  Cycle-type invariants prune
    impossible searches immediately.
    """
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return None
    if max_depth is None:
        max_depth = 2 * len(q1.vertices) ** 2
    try:
        if canonical_type(q1) != canonical_type(q2):
            return None
    except ValueError:
        pass
    start = _untagged(q1)
    goal = _untagged(q2)
    if quiver_isomorphic(start, goal):
        return []
    seen = {_state_invariant(start): [start]}
    queue = deque([(start, [])])
    while queue:
        state, path = queue.popleft()
        if len(path) >= max_depth:
            continue
        moves = [v for v in state.vertices if state.is_sink(v) or state.is_source(v)]
        for v in moves:
            nxt = bgp_reflect(state, v)
            key = _state_invariant(nxt)
            bucket = seen.setdefault(key, [])
            if any(quiver_isomorphic(nxt, old) for old in bucket):
                continue
            bucket.append(nxt)
            witness = path + [v]
            if quiver_isomorphic(nxt, goal):
                return witness
            queue.append((nxt, witness))
    return None


def path_count(q):
    """Number of directed paths, trivial paths included (acyclic quivers)."""
    if not q.is_acyclic():
        raise ValueError("path count needs an acyclic quiver")
    order = []
    indeg = {v: 0 for v in q.vertices}
    adj = {v: [] for v in q.vertices}
    for (s, t, _) in q.arrows:
        indeg[t] += 1
        adj[s].append(t)
    queue = deque(v for v in q.vertices if indeg[v] == 0)
    while queue:
        v = queue.popleft()
        order.append(v)
        for t in adj[v]:
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    paths_from = {}
    for v in reversed(order):
        paths_from[v] = 1 + sum(paths_from[t] for t in adj[v])
    return sum(paths_from.values())


def to_dot(q):
    lines = ["digraph Q {"]
    for v in q.vertices:
        lines.append('  "%s";' % v)
    for (s, t, tag) in q.arrows:
        if tag:
            lines.append('  "%s" -> "%s" [label=%s];' % (s, t, tag))
        else:
            lines.append('  "%s" -> "%s";' % (s, t))
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(q):
    return {
        "vertices": list(q.vertices),
        "arrows": [{"src": s, "dst": t, "tag": tag or None} for (s, t, tag) in q.arrows],
    }
