# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Structural questions about colorings.

This covers induced color counts, the r-complete / r-void / r-neutral
classification of graphs, searches for monochromatic cliques and
cliques-minus-one-hyperedge, monochromatic component counts, and the named
graph families used as test subjects and Ramsey bases.
"""
import logging
import functools
import itertools
from collections import namedtuple, defaultdict

from hyperlift.colorings import coloring_from_rule, constant_coloring
from hyperlift.exceptions import (ShapeError, DomainError, RangeError,
                                  CertificateError)
from hyperlift.field import gf16_log, is_prime
from hyperlift.subsets import VertexSet, subsets_iter, all_subsets


logger = logging.getLogger("hyperlift.structure")

COMPLETE = "complete"
VOID = "void"
NEUTRAL = "neutral"

INDUCED = "induced"
CONTAINS = "contains"
SEARCH_MODES = (INDUCED, CONTAINS)


RBehavior = namedtuple("RBehavior", "tag witness_odd witness_even")

PatternHit = namedtuple("PatternHit", "vertices color missing",
                        defaults=(None,))


class _DisjointSet(object):
    """Union-find with path compression and union by rank."""

    def __init__(self, elements=()):
        self.parent = {}
        self.rank = {}
        for e in elements:
            self.make_set(e)

    def make_set(self, e):
        if e not in self.parent:
            self.parent[e] = e
            self.rank[e] = 0

    def find(self, e):
        self.make_set(e)
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    def union(self, x, y):
        x_root, y_root = self.find(x), self.find(y)
        if x_root == y_root:
            return
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1

    def sets(self):
        groups = defaultdict(set)
        for e in self.parent:
            groups[self.find(e)].add(e)
        return sorted(tuple(sorted(group)) for group in groups.values())


@functools.lru_cache(maxsize=8)
def _lookup(f):
    # Hyperedge tuple -> color; VertexSet hashes like a plain tuple.
    return dict(f.items())


def _vertex_subset(f, subset):
    if subset is None:
        return VertexSet(range(f.n))
    subset = VertexSet(subset).check_within(f.n)
    if len(subset) < f.r:
        raise RangeError("need at least %d vertices, got %r" % (f.r, subset))
    return subset


def _check_color(f, c):
    return f.field.element(c)


def induced_color_counts(f, subset=None):
    """Count, per color, the r-subsets of subset carrying that color."""
    subset = _vertex_subset(f, subset)
    lookup = _lookup(f)
    counts = [0] * f.q
    for e in subsets_iter(subset, f.r):
        counts[lookup[e]] += 1
    return counts


def classify_r_behavior(g, r):
    """Classify the graph g as r-complete, r-void or r-neutral.

    Every r-vertex induced subgraph is inspected.  The witnesses are the
    first r-sets, in colex order, with an odd and an even edge count.
    """
    if g.r != 2 or g.q != 2:
        raise ShapeError("classification needs a graph (r=2, q=2), got %r"
                         % (g,))
    if not 2 < r <= g.n:
        raise RangeError("need 2 < r <= n, got r=%d n=%d" % (r, g.n))
    lookup = _lookup(g)
    witness_odd = witness_even = None
    for e in all_subsets(g.n, r):
        edges = sum(lookup[pair] for pair in itertools.combinations(e, 2))
        if edges % 2:
            if witness_odd is None:
                witness_odd = e
        elif witness_even is None:
            witness_even = e
        if witness_odd is not None and witness_even is not None:
            return RBehavior(NEUTRAL, witness_odd, witness_even)
    if witness_even is None:
        return RBehavior(COMPLETE, witness_odd, None)
    return RBehavior(VOID, None, witness_even)


def _search(f, color, m, max_missing, want_missing=None):
    # Depth-first over increasing vertex sequences.  A partial set is only
    # extended while it has at most max_missing r-subsets off color, so the
    # first complete set found is the lexicographically least one.
    lookup = _lookup(f)
    r, n = f.r, f.n
    chosen = []
    missing = []

    def extend(start):
        if len(chosen) == m:
            return want_missing is None or len(missing) == want_missing
        for v in range(start, n - (m - len(chosen)) + 1):
            fresh = []
            if len(chosen) >= r - 1:
                for head in itertools.combinations(chosen, r - 1):
                    e = head + (v,)
                    if lookup[e] != color:
                        fresh.append(e)
                        if len(missing) + len(fresh) > max_missing:
                            break
            if len(missing) + len(fresh) > max_missing:
                continue
            chosen.append(v)
            missing.extend(fresh)
            if extend(v + 1):
                return True
            chosen.pop()
            del missing[len(missing) - len(fresh):]
        return False

    if extend(0):
        return VertexSet(chosen), [VertexSet(e) for e in missing]
    return None


def find_mono_clique(f, c, m):
    """Return an m-set all of whose r-subsets have color c, or None."""
    c = _check_color(f, c)
    if not f.r <= m <= f.n:
        raise RangeError("clique size must be in [%d, %d], got %d"
                         % (f.r, f.n, m))
    found = _search(f, c, m, max_missing=0)
    if found is None:
        return None
    return PatternHit(found[0], c)


def find_clique_minus_edge(f, c, m, mode=CONTAINS):
    """Search for K_m^(r) - e in color c.

    In induced mode the m-set must have exactly one r-subset off color c,
    which is reported as ``missing``.  In contains mode at least
    C(m, r) - 1 of its r-subsets must have color c, so a full clique also
    counts (``missing`` is then None).
    """
    c = _check_color(f, c)
    if mode not in SEARCH_MODES:
        raise DomainError("unknown search mode %r" % (mode,))
    if not f.r < m <= f.n:
        raise RangeError("K_m - e needs %d < m <= %d, got %d"
                         % (f.r, f.n, m))
    want = 1 if mode == INDUCED else None
    found = _search(f, c, m, max_missing=1, want_missing=want)
    if found is None:
        return None
    vertices, missing = found
    return PatternHit(vertices, c, missing[0] if missing else None)


def mono_components(f, subset, c):
    """Count connected components of the c-colored hyperedges in subset.

    Vertices of subset lying in no c-colored hyperedge are components of
    their own.
    """
    return len(component_sets(f, subset, c))


def component_sets(f, subset, c):
    """The vertex sets of the components counted by mono_components()."""
    c = _check_color(f, c)
    subset = _vertex_subset(f, subset)
    lookup = _lookup(f)
    components = _DisjointSet(subset)
    for e in subsets_iter(subset, f.r):
        if lookup[e] == c:
            for v in e[1:]:
                components.union(e[0], v)
    return [VertexSet(group) for group in components.sets()]


def is_clique_union(g, subset, c=1, max_cliques=2):
    """True if the c-colored graph on subset is a union of disjoint cliques.

    At most max_cliques cliques are allowed; isolated vertices count as
    K_1 summands.
    """
    if g.r != 2:
        raise ShapeError("clique unions are defined for graphs")
    lookup = _lookup(g)
    groups = component_sets(g, subset, c)
    if len(groups) > max_cliques:
        return False
    for group in groups:
        for pair in itertools.combinations(group, 2):
            if lookup[pair] != c:
                return False
    return True


# Named families.

def _complete(n):
    return constant_coloring(int(n), 2, 2, 1)


def _parts(s, t):
    s, t = int(s), int(t)
    if s < 1 or t < 1 or s + t < 2:
        raise DomainError("part sizes must be positive, got s=%d t=%d"
                          % (s, t))
    return s, t


def _bipartite(s, t):
    s, t = _parts(s, t)
    return coloring_from_rule(s + t, 2, 2,
                              lambda e: 1 if e[0] < s <= e[1] else 0)


def _clique_union(s, t):
    s, t = _parts(s, t)
    return coloring_from_rule(s + t, 2, 2,
                              lambda e: 0 if e[0] < s <= e[1] else 1)


def _pentagon():
    def rule(e):
        return 1 if (e[1] - e[0]) in (1, 4) else 2
    return coloring_from_rule(5, 2, 3, rule)


def _paley(p):
    p = int(p)
    if not is_prime(p) or p % 4 != 1:
        raise DomainError("paley needs a prime p = 1 (mod 4), got %d" % (p,))
    residues = set((x * x) % p for x in range(1, p))
    return coloring_from_rule(p, 2, 2,
                              lambda e: 1 if (e[1] - e[0]) % p in residues
                              else 0)


def _gf16_3coloring():
    # Vertices are the elements of GF(16); x - y = x ^ y.  The cubes form
    # the order-5 subgroup of GF(16)*, and the color is the coset index.
    coloring = coloring_from_rule(16, 2, 3,
                                  lambda e: gf16_log(e[0] ^ e[1]) % 3)
    for color in range(3):
        hit = find_mono_clique(coloring, color, 3)
        if hit is not None:
            raise CertificateError("gf16_3coloring has a color-%d triangle "
                                   "%r" % (color, hit.vertices))
    return coloring


FAMILIES = {
    "complete": (_complete, ("n",)),
    "bipartite": (_bipartite, ("s", "t")),
    "clique_union": (_clique_union, ("s", "t")),
    "pentagon": (_pentagon, ()),
    "paley": (_paley, ("p",)),
    "gf16_3coloring": (_gf16_3coloring, ()),
}


def generate_family(family, **params):
    """Build the named graph coloring with the given integer parameters."""
    try:
        factory, names = FAMILIES[family]
    except KeyError:
        raise DomainError("unknown family %r (known: %s)"
                          % (family, ", ".join(sorted(FAMILIES))))
    if set(params) != set(names):
        raise DomainError("family %s takes parameters (%s), got (%s)"
                          % (family, ", ".join(names),
                             ", ".join(sorted(params))))
    try:
        coloring = factory(*[int(params[name]) for name in names])
    except (ShapeError, ValueError) as e:
        raise DomainError("bad parameters for %s: %s" % (family, e))
    logger.debug("generated %s%r: %r", family, params, coloring)
    return coloring


__all__ = ["RBehavior", "PatternHit", "COMPLETE", "VOID", "NEUTRAL",
           "INDUCED", "CONTAINS", "induced_color_counts",
           "classify_r_behavior", "find_mono_clique",
           "find_clique_minus_edge", "mono_components", "component_sets",
           "is_clique_union", "generate_family", "FAMILIES"]
