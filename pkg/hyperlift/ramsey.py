# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Lower-bound colorings for 3-uniform hypergraph Ramsey numbers.

The pipeline takes a 3-colored complete graph with no monochromatic K_{s_i}
in color i, lifts it to a 3-colored K^(3) (a rainbow triangle takes the
distinguished color), blows that up into copies with two extra colors
for the hyperedges that straddle copies, and checks every forbidden
pattern by exhaustive search.  A Certificate is only ever marked verified
when every search came back empty.

Certificates are stored as a coloring file with one trailing comment:

    # CERT statement=<text> verified=<true|false> targets=<spec-string>

where spec-string is a comma-separated list of
``<color>:<clique|cliqueminus>:<m>[:induced|:contains]``.
"""
import re
import logging
from collections import namedtuple

from hyperlift.colorings import (HyperedgeColoring, coloring_from_rule,
                                 read_coloring, write_coloring)
from hyperlift.exceptions import (ShapeError, DomainError, RangeError,
                                  CertificateError, ColoringParseError)
from hyperlift.structure import (INDUCED, CONTAINS, SEARCH_MODES,
                                 find_mono_clique, find_clique_minus_edge,
                                 generate_family)
from hyperlift.subsets import MAX_WIDTH


logger = logging.getLogger("hyperlift.ramsey")

CLIQUE = "clique"
CLIQUE_MINUS = "cliqueminus"
PATTERNS = (CLIQUE, CLIQUE_MINUS)

BASE_COLORS = 3
BLOWUP_COLORS = 5
# Label-only field for 5-colorings: the smallest prime with 5 elements.
BLOWUP_FIELD = 5
STRADDLE_TWO = 3
STRADDLE_THREE = 4

# Known values and lower bounds for R_3(K_k) = R(K_k, K_k, K_k; 2).
THREE_COLOR_CLIQUE_BOUNDS = (
    (3, 17, True),
    (4, 128, False),
    (5, 417, False),
    (6, 1070, False),
    (7, 3214, False),
    (8, 6079, False),
    (9, 13761, False),
)

_CERT_RE = re.compile(r"^#\s*CERT statement=(?P<statement>.*) "
                      r"verified=(?P<verified>true|false) "
                      r"targets=(?P<targets>.*)$")


class Target(namedtuple("Target", "color pattern m mode")):
    """One forbidden monochromatic pattern of an AvoidanceSpec."""

    __slots__ = ()

    def __new__(cls, color, pattern, m, mode=CONTAINS):
        if pattern not in PATTERNS:
            raise DomainError("unknown pattern %r" % (pattern,))
        if mode not in SEARCH_MODES:
            raise DomainError("unknown mode %r" % (mode,))
        color, m = int(color), int(m)
        if color < 0 or m < 1:
            raise DomainError("bad target %d:%s:%d" % (color, pattern, m))
        if pattern == CLIQUE:
            mode = CONTAINS
        return super(Target, cls).__new__(cls, color, pattern, m, mode)

    def label(self, r):
        if self.pattern == CLIQUE:
            return "K_%d^(%d)" % (self.m, r)
        return "K_%d^(%d)-e" % (self.m, r)

    def __str__(self):
        if self.pattern == CLIQUE:
            return "%d:%s:%d" % (self.color, self.pattern, self.m)
        return "%d:%s:%d:%s" % (self.color, self.pattern, self.m, self.mode)


class AvoidanceSpec(object):
    """The monochromatic patterns a coloring must avoid, one per color."""

    def __init__(self, targets=()):
        targets = tuple(t if isinstance(t, Target) else Target(*t)
                        for t in targets)
        colors = [t.color for t in targets]
        if len(set(colors)) != len(colors):
            raise DomainError("avoidance spec repeats a color: %r"
                              % (colors,))
        self.targets = tuple(sorted(targets))

    def __iter__(self):
        return iter(self.targets)

    def __len__(self):
        return len(self.targets)

    def __eq__(self, other):
        return (isinstance(other, AvoidanceSpec) and
                other.targets == self.targets)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.targets)

    def __repr__(self):
        return "AvoidanceSpec(%r)" % (str(self),)

    def __str__(self):
        return format_avoidance_spec(self)

    def check_against(self, f):
        """Raise if some target makes no sense for the coloring f."""
        for t in self.targets:
            if t.color >= f.q:
                raise DomainError("target color %d is not below q=%d"
                                  % (t.color, f.q))
            if t.pattern == CLIQUE and t.m < f.r:
                raise DomainError("clique target needs m >= %d, got %d"
                                  % (f.r, t.m))
            if t.pattern == CLIQUE_MINUS and t.m <= f.r:
                raise DomainError("K_m - e target needs m > %d, got %d"
                                  % (f.r, t.m))

    def statement(self, r, n):
        """The lower bound that avoiding this spec on K_n^(r) proves."""
        labels = ", ".join(t.label(r) for t in self.targets)
        return "R(%s; %d) > %d" % (labels, r, n)


def parse_avoidance_spec(text):
    """Parse a spec-string like ``0:cliqueminus:5:contains,1:clique:5``."""
    text = (text or "").strip()
    if not text:
        return AvoidanceSpec()
    targets = []
    for item in text.split(","):
        parts = [p.strip() for p in item.split(":")]
        if len(parts) not in (3, 4):
            raise DomainError("malformed avoidance target %r" % (item,))
        try:
            color, m = int(parts[0]), int(parts[2])
        except ValueError:
            raise DomainError("malformed avoidance target %r" % (item,))
        targets.append(Target(color, parts[1], m, *parts[3:]))
    return AvoidanceSpec(targets)


def format_avoidance_spec(spec):
    return ",".join(str(t) for t in spec.targets)


class Certificate(object):
    """A coloring together with the outcome of its avoidance searches."""

    def __init__(self, coloring, spec, statement, violations=(),
                 block_size=None):
        self.coloring = coloring
        self.spec = spec
        self.statement = statement
        self.violations = tuple(violations)
        # Set for blown-up colorings so witnesses can be read per copy.
        self.block_size = block_size

    @property
    def verified(self):
        return not self.violations

    def summary(self):
        lines = ["statement: %s" % (self.statement,),
                 "targets: %s" % (format_avoidance_spec(self.spec),),
                 "verified: %s" % ("true" if self.verified else "false")]
        for hit in self.violations:
            line = "violation: color=%d vertices=%r" % (hit.color,
                                                       hit.vertices)
            if hit.missing is not None:
                line += " missing=%r" % (hit.missing,)
            if self.block_size:
                line += " blocks=%s" % (" ".join(
                    "%d.%d" % block_position(v, self.block_size)
                    for v in hit.vertices),)
            lines.append(line)
        return "\n".join(lines)


def _find(f, target):
    if target.m > f.n:
        return None
    if target.pattern == CLIQUE:
        return find_mono_clique(f, target.color, target.m)
    return find_clique_minus_edge(f, target.color, target.m, target.mode)


def verify_avoidance(f, spec, statement=None):
    """Search f for every target of spec and return a Certificate."""
    spec.check_against(f)
    violations = []
    for target in spec:
        hit = _find(f, target)
        logger.debug("target %s: %s", target, hit or "absent")
        if hit is not None:
            violations.append(hit)
    if statement is None:
        statement = spec.statement(f.r, f.n)
    return Certificate(f, spec, statement, violations)


def lift_3coloring(f, rainbow_color=0):
    """Lift a 3-colored graph to a 3-colored 3-uniform hypergraph.

    A triangle with at most two colors takes the color that appears an odd
    number of times on its edges; a rainbow triangle takes rainbow_color.
    """
    if f.r != 2:
        raise ShapeError("lift_3coloring needs a graph, got r=%d" % (f.r,))
    if f.q != BASE_COLORS:
        raise DomainError("lift_3coloring needs q=3, got q=%d" % (f.q,))
    rainbow_color = f.field.element(rainbow_color)
    edges = dict(f.items())

    def rule(e):
        a, b, c = e
        colors = (edges[(a, b)], edges[(a, c)], edges[(b, c)])
        if len(set(colors)) == 3:
            return rainbow_color
        for color in colors:
            if colors.count(color) % 2:
                return color

    return coloring_from_rule(f.n, 3, BASE_COLORS, rule)


def blowup_5color(base, copies):
    """Join `copies` disjoint copies of a 3-colored K^(3) with two new colors.

    Copy i occupies vertices [i * p, (i + 1) * p) where p = base.n.
    Hyperedges inside one copy keep the base color, those meeting exactly
    two copies get color 3 and those meeting three copies get color 4.
    """
    if base.r != 3:
        raise ShapeError("blow-up needs a 3-uniform base, got r=%d"
                         % (base.r,))
    if any(v >= BASE_COLORS for v in base.values):
        raise DomainError("blow-up base may only use colors 0, 1 and 2")
    copies = int(copies)
    if copies < 3:
        raise DomainError("need at least 3 copies, got %d: with fewer the "
                          "K_{copies+1}^(3)-e target has no hyperedges"
                          % (copies,))
    size = base.n
    if copies * size > MAX_WIDTH:
        raise RangeError("%d copies of %d vertices exceed %d vertices"
                         % (copies, size, MAX_WIDTH))
    inner = dict(base.items())

    def rule(e):
        blocks = set(v // size for v in e)
        if len(blocks) == 1:
            return inner[tuple(v % size for v in e)]
        if len(blocks) == 2:
            return STRADDLE_TWO
        return STRADDLE_THREE

    return coloring_from_rule(copies * size, 3, BLOWUP_FIELD, rule)


def block_position(vertex, block_size):
    """Map a blown-up vertex to its (copy, offset) pair."""
    return divmod(vertex, block_size)


def derive_clique_sizes(base):
    """Smallest avoided monochromatic clique order per color, at least 3."""
    sizes = []
    for color in range(BASE_COLORS):
        m = 2
        while m <= base.n and find_mono_clique(base, color, m) is not None:
            m += 1
        sizes.append(max(3, m))
    return tuple(sizes)


def check_base(base, cliques):
    """Make sure base has no monochromatic K_{cliques[i]} in color i."""
    if base.r != 2 or base.q != BASE_COLORS:
        raise ShapeError("a base must be a 3-colored graph, got %r" % (base,))
    for color, s in enumerate(cliques):
        if s < 3:
            raise DomainError("clique orders must be at least 3, got %r"
                              % (cliques,))
        if s > base.n:
            continue
        hit = find_mono_clique(base, color, s)
        if hit is not None:
            raise CertificateError("base has a monochromatic K_%d in color "
                                   "%d on %r" % (s, color, hit.vertices))


def avoidance_spec_for(cliques, copies=None):
    """Targets implied by base clique orders (and the number of copies)."""
    s1, s2, s3 = cliques
    targets = [Target(0, CLIQUE_MINUS, 2 * s1 - 1, CONTAINS),
               Target(1, CLIQUE, 2 * s2 - 1),
               Target(2, CLIQUE, 2 * s3 - 1)]
    if copies is not None:
        targets.append(Target(STRADDLE_TWO, CLIQUE, 5))
        targets.append(Target(STRADDLE_THREE, CLIQUE_MINUS, copies + 1,
                              CONTAINS))
    return AvoidanceSpec(targets)


def certify_bound(base, copies, cliques=None, rainbow_color=0):
    """Build and verify the blown-up coloring for a base graph.

    base is either a family name or a 3-colored graph coloring (for
    externally found witnesses).  Every property of the base is re-checked
    by search rather than trusted.
    """
    copies = int(copies)
    if copies < 3:
        raise DomainError("need at least 3 copies, got %d" % (copies,))
    if not isinstance(base, HyperedgeColoring):
        base = generate_family(base)
    if cliques is None:
        cliques = derive_clique_sizes(base)
    check_base(base, cliques)
    logger.info("base of order %d avoids K_%d, K_%d, K_%d", base.n, *cliques)
    lifted = lift_3coloring(base, rainbow_color)
    blown = blowup_5color(lifted, copies)
    spec = avoidance_spec_for(cliques, copies)
    certificate = verify_avoidance(blown, spec)
    certificate.block_size = base.n
    logger.info("%s: %s", certificate.statement,
                "verified" if certificate.verified else "NOT verified")
    return certificate


def bound_table(copies):
    """Statements implied by the known values of R_3(K_k), k = 3..9."""
    rows = []
    for k, value, exact in THREE_COLOR_CLIQUE_BOUNDS:
        spec = avoidance_spec_for((k, k, k), copies)
        relation = "=" if exact else ">="
        rows.append("R_3(K_%d) %s %d => %s"
                    % (k, relation, value,
                       spec.statement(3, copies * (value - 1))))
    return rows


def write_certificate(certificate):
    verified = "true" if certificate.verified else "false"
    return write_coloring(certificate.coloring) + (
        "# CERT statement=%s verified=%s targets=%s\n"
        % (certificate.statement, verified,
           format_avoidance_spec(certificate.spec)))


def _parse_certificate(text):
    coloring = read_coloring(text)
    for lineno, line in enumerate(text.splitlines(), 1):
        match = _CERT_RE.match(line.strip())
        if match is None:
            continue
        try:
            spec = parse_avoidance_spec(match.group("targets"))
        except DomainError as e:
            raise ColoringParseError(str(e), lineno)
        return (coloring, spec, match.group("statement"),
                match.group("verified") == "true")
    raise ColoringParseError("no '# CERT' line found")


def read_certificate(text):
    """Load a certificate and re-run every search it records.

    Returns (certificate, claimed) where claimed is the verified flag
    stored in the file; the returned certificate reflects the new searches.
    """
    coloring, spec, statement, claimed = _parse_certificate(text)
    certificate = verify_avoidance(coloring, spec, statement)
    if certificate.verified != claimed:
        logger.warning("certificate claims verified=%s but re-verification "
                       "gives %s", claimed, certificate.verified)
    return certificate, claimed


__all__ = ["Target", "AvoidanceSpec", "Certificate",
           "CLIQUE", "CLIQUE_MINUS", "INDUCED", "CONTAINS",
           "parse_avoidance_spec", "format_avoidance_spec",
           "verify_avoidance", "lift_3coloring", "blowup_5color",
           "block_position", "derive_clique_sizes", "check_base",
           "avoidance_spec_for", "certify_bound", "bound_table",
           "write_certificate", "read_certificate"]
