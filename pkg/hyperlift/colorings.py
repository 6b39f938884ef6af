# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Hyperedge colorings of K_n^(r) over F_q.

A coloring is a vector of C(n, r) field elements indexed by the colex rank
of the hyperedge.  A graph is just a 2-uniform F_2 coloring whose
1-colored pairs are the edges, so graphs and hypergraph colorings share
this one type.

Colorings are serialized in a small text format:

    HEC 1
    n=<n> r=<r> q=<q>
    <values in colex order, 20 per line, single-space separated>

Lines starting with '#' are ignored on read.
"""
import re

from hyperlift.exceptions import (ShapeError, DomainError, FieldError,
                                  RangeError, ColoringParseError)
from hyperlift.field import prime_field_ops
from hyperlift.subsets import (VertexSet, MAX_WIDTH, binom, colex_rank,
                               all_subsets)


FORMAT_MAGIC = "HEC 1"
VALUES_PER_LINE = 20

_HEADER_RE = re.compile(r"^n=([0-9]+) r=([0-9]+) q=([0-9]+)$", re.ASCII)
_TOKEN_RE = re.compile(r"\S+")
_COLOR_RE = re.compile(r"[0-9]+", re.ASCII)


class HyperedgeColoring(object):
    """An immutable F_q-coloring of the r-subsets of {0, ..., n-1}."""

    __slots__ = ("n", "r", "q", "values", "_hash")

    def __init__(self, n, r, q, values):
        n, r, q = int(n), int(r), int(q)
        if r < 2:
            raise ShapeError("uniformity must be at least 2, got %d" % (r,))
        if n < r:
            raise ShapeError("need n >= r, got n=%d r=%d" % (n, r))
        if n > MAX_WIDTH:
            raise RangeError("at most %d vertices are supported" % MAX_WIDTH)
        field = prime_field_ops(q)
        values = tuple(int(v) for v in values)
        if len(values) != binom(n, r):
            raise ShapeError("expected %d values for n=%d r=%d, got %d"
                             % (binom(n, r), n, r, len(values)))
        for v in values:
            if not 0 <= v < q:
                field.element(v)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "values", values)
        # Colorings key the per-coloring lookup caches.
        object.__setattr__(self, "_hash", hash((self.shape, values)))

    def __setattr__(self, name, value):
        raise AttributeError("colorings are immutable")

    @property
    def shape(self):
        return (self.n, self.r, self.q)

    @property
    def field(self):
        return prime_field_ops(self.q)

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, HyperedgeColoring):
            return NotImplemented
        return self.shape == other.shape and self.values == other.values

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "<HyperedgeColoring n=%d r=%d q=%d>" % self.shape

    def hyperedges(self):
        """Iterate over the r-subsets, in the order of self.values."""
        return all_subsets(self.n, self.r)

    def items(self):
        return zip(self.hyperedges(), self.values)

    def value_of(self, e):
        e = VertexSet(e).check_within(self.n)
        if len(e) != self.r:
            raise ShapeError("expected an %d-set, got %r" % (self.r, e))
        return self.values[colex_rank(e)]

    def color_classes(self):
        """Map each color to the list of hyperedges that carry it."""
        classes = dict((c, []) for c in range(self.q))
        for e, v in self.items():
            classes[v].append(e)
        return classes


def _check_same_shape(a, b):
    if a.shape != b.shape:
        raise ShapeError("coloring shapes differ: %r vs %r"
                         % (a.shape, b.shape))


def coloring_from_rule(n, r, q, rule):
    """Color every r-subset e of range(n) with rule(e)."""
    return HyperedgeColoring(n, r, q, [rule(e) for e in all_subsets(n, r)])


def constant_coloring(n, r, q, c):
    prime_field_ops(q).element(c)
    return HyperedgeColoring(n, r, q, [c] * binom(n, r))


def basis_coloring(n, r, q, e):
    """The coloring that is 1 on the hyperedge e and 0 elsewhere."""
    e = VertexSet(e).check_within(n)
    if len(e) != r:
        raise ShapeError("basis hyperedge must have %d vertices, got %r"
                         % (r, e))
    values = [0] * binom(n, r)
    values[colex_rank(e)] = 1
    return HyperedgeColoring(n, r, q, values)


def graph_coloring(n, edges, q=2):
    """The 2-uniform coloring that is 1 exactly on the given edges."""
    edges = set(VertexSet.of(e) for e in edges)
    return coloring_from_rule(n, 2, q, lambda e: 1 if e in edges else 0)


def random_coloring(n, r, q, rng):
    """A uniformly random coloring drawn from the random.Random rng."""
    return HyperedgeColoring(n, r, q,
                             [rng.randrange(q) for _ in range(binom(n, r))])


def vs_combine(a, b, alpha=1):
    """Return alpha * a + b."""
    _check_same_shape(a, b)
    alpha = a.field.element(alpha)
    q = a.q
    values = [(alpha * x + y) % q for x, y in zip(a.values, b.values)]
    return HyperedgeColoring(a.n, a.r, q, values)


def complement(f):
    """Swap the colors 0 and 1 of an F_2 coloring."""
    if f.q != 2:
        raise DomainError("complements are only defined over F_2, not F_%d"
                          % (f.q,))
    return HyperedgeColoring(f.n, f.r, 2, [1 - v for v in f.values])


def total_sum(f):
    return sum(f.values) % f.q


def hamming_distance(f, g):
    _check_same_shape(f, g)
    return sum(1 for x, y in zip(f.values, g.values) if x != y)


def write_coloring(f):
    """Serialize f in the canonical text format."""
    lines = [FORMAT_MAGIC, "n=%d r=%d q=%d" % f.shape]
    values = [str(v) for v in f.values]
    for start in range(0, len(values), VALUES_PER_LINE):
        lines.append(" ".join(values[start:start + VALUES_PER_LINE]))
    return "\n".join(lines) + "\n"

def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, line


def _end_column(line):
    return len(line.rstrip()) + 1


def read_coloring(text):
    """Parse a coloring from text, raising ColoringParseError on problems.

    Every error names the 1-based line and column it was found at; a
    missing value is reported just past the last content line.
    """
    lines = _content_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ColoringParseError("empty coloring file", 1, 1)
    if line.split() != FORMAT_MAGIC.split():
        raise ColoringParseError("expected %r header" % (FORMAT_MAGIC,),
                                 lineno, 1)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ColoringParseError("missing 'n= r= q=' line",
                                 lineno, _end_column(line))
    match = _HEADER_RE.match(" ".join(line.split()))
    if match is None:
        raise ColoringParseError("malformed shape line %r" % (line.strip(),),
                                 lineno, 1)
    n, r, q = (int(x) for x in match.groups())
    if r < 2 or n < r:
        raise ColoringParseError("need n >= r >= 2, got n=%d r=%d" % (n, r),
                                 lineno, 1)
    try:
        expected = binom(n, r)
        prime_field_ops(q)
    except (RangeError, FieldError) as e:
        raise ColoringParseError(str(e), lineno, 1)
    values = []
    for lineno, line in lines:
        for token in _TOKEN_RE.finditer(line):
            column = token.start() + 1
            if _COLOR_RE.fullmatch(token.group()) is None:
                raise ColoringParseError("not a color: %r" % (token.group(),),
                                         lineno, column)
            value = int(token.group())
            if value >= q:
                raise ColoringParseError("color %d is not below q=%d"
                                         % (value, q), lineno, column)
            if len(values) == expected:
                raise ColoringParseError("more than the %d values expected"
                                         % (expected,), lineno, column)
            values.append(value)
    if len(values) != expected:
        raise ColoringParseError("expected %d values, found %d"
                                 % (expected, len(values)),
                                 lineno, _end_column(line))
    try:
        return HyperedgeColoring(n, r, q, values)
    except (ShapeError, RangeError) as e:
        raise ColoringParseError(str(e), lineno, 1)
