# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Property suites for the lifting results.

Each suite runs one family of assertions over exhaustive small cases and
seeded random samples, and returns a SuiteResult.  The reports are plain
text with one stable line per suite (plus indented notes for values that
are reported rather than asserted), so a fixed seed gives byte-identical
output.

"""
import random
import logging
import itertools
from collections import namedtuple

from hyperlift.colorings import (HyperedgeColoring, random_coloring,
                                 vs_combine, complement, total_sum)
from hyperlift.exceptions import DomainError
from hyperlift.lifting import (LiftSpec, apply_lift, lift_matrix,
                               matrix_apply, rank_kernel, kernel_elements,
                               min_kernel_weight)
from hyperlift.ramsey import (lift_3coloring, blowup_5color,
                              derive_clique_sizes, avoidance_spec_for,
                              verify_avoidance, certify_bound,
                              STRADDLE_TWO, STRADDLE_THREE)
from hyperlift.structure import (COMPLETE, VOID, NEUTRAL, INDUCED,
                                 classify_r_behavior, find_mono_clique,
                                 find_clique_minus_edge, mono_components,
                                 is_clique_union, induced_color_counts,
                                 generate_family)
from hyperlift.subsets import binom, pair_parity, subsets_iter


logger = logging.getLogger("hyperlift.checks")

# Counter-examples kept per suite.
MAX_DETAIL = 3


SuiteResult = namedtuple("SuiteResult", "name claim cases failures detail")


class _Tally(object):
    """Counts cases and keeps the first few counter-examples."""

    def __init__(self, name, claim):
        self.name = name
        self.claim = claim
        self.cases = 0
        self.failures = 0
        self.detail = []

    def check(self, ok, describe):
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.failures <= MAX_DETAIL:
                self.detail.append("counter-example: %s" % (describe(),))

    def note(self, text):
        self.detail.append(text)

    def result(self):
        return SuiteResult(self.name, self.claim, self.cases,
                           self.failures, tuple(self.detail))


class _Context(object):

    def __init__(self, seed, n_max, samples, random_graphs):
        self.seed = seed
        self.n_max = n_max
        self.samples = samples
        self.random_graphs = random_graphs

    def rng(self, name):
        # One stream per suite so that suites can run in any subset.
        return random.Random("%s:%d" % (name, self.seed))

    def upto(self, limit):
        return min(limit, self.n_max)


def _all_graphs(n):
    pairs = binom(n, 2)
    for bits in range(2 ** pairs):
        yield HyperedgeColoring(n, 2, 2,
                                [(bits >> i) & 1 for i in range(pairs)])


def _linearity(tally, ctx):
    rng = ctx.rng(tally.name)
    configs = [(n, s, r) for (n, s, r) in ((5, 2, 3), (6, 2, 4), (6, 3, 4))
               if n <= ctx.n_max]
    for q in (2, 3, 5):
        for n, s, r in configs:
            spec = LiftSpec(q, n, s, r)
            matrix = lift_matrix(spec)
            summary = rank_kernel(spec)
            tally.check(summary.rank + summary.kernel_dim == spec.source_dim,
                        lambda: "%s rank+kernel != C(n,s)" % (spec,))
            for _ in range(ctx.samples // 10 or 1):
                a = random_coloring(n, s, q, rng)
                b = random_coloring(n, s, q, rng)
                alpha = rng.randrange(q)
                left = apply_lift(spec, vs_combine(a, b, alpha))
                right = vs_combine(apply_lift(spec, a), apply_lift(spec, b),
                                   alpha)
                tally.check(left == right,
                            lambda: "%s alpha=%d" % (spec, alpha))
                tally.check(matrix_apply(spec, matrix, a) ==
                            apply_lift(spec, a),
                            lambda: "%s matrix and stream differ" % (spec,))


def _is_cut_graph(f):
    # The 0-colored graph is K_n or two disjoint cliques.
    return is_clique_union(f, None, c=0, max_cliques=2)


def _preimage(tally, ctx):
    for n in range(4, ctx.upto(8) + 1):
        spec = LiftSpec(2, n, 2, 3)
        summary = rank_kernel(spec)
        tally.check(summary.preimage_count == 2 ** (n - 1),
                    lambda: "n=%d preimage_count=%d"
                    % (n, summary.preimage_count))
        for k in kernel_elements(spec):
            tally.check(_is_cut_graph(k),
                        lambda: "n=%d kernel element %r" % (n, k.values))
    for n in range(4, ctx.upto(5) + 1):
        spec = LiftSpec(2, n, 2, 3)
        images = set(apply_lift(spec, f).values for f in _all_graphs(n))
        expected = 2 ** (binom(n, 2) - (n - 1))
        tally.check(len(images) == expected,
                    lambda: "n=%d has %d images, expected %d"
                    % (n, len(images), expected))


def _min_distance(tally, ctx):
    configs = [(2, 5, 2, 3), (2, 6, 2, 3), (2, 7, 2, 3), (2, 6, 3, 4),
               (3, 5, 2, 3), (3, 6, 2, 3)]
    for q, n, s, r in configs:
        if n > ctx.n_max:
            continue
        spec = LiftSpec(q, n, s, r)
        bound = n - r + 2
        try:
            weight = min_kernel_weight(spec)
        except DomainError:
            tally.note("%s has a trivial kernel" % (spec,))
            continue
        tally.check(weight >= bound,
                    lambda: "%s min weight %d < %d" % (spec, weight, bound))
        tally.note("%s min kernel weight %d (bound %d)"
                   % (spec, weight, bound))
        if (q, n, s, r) == (2, 5, 2, 3):
            tally.check(weight == 4,
                        lambda: "%s min weight %d, expected 4"
                        % (spec, weight))


def _sum_law(tally, ctx):
    rng = ctx.rng(tally.name)
    for q in (2, 3):
        for n, s, r in ((4, 2, 3), (5, 2, 3), (6, 2, 4), (7, 3, 4)):
            if n > ctx.n_max:
                continue
            spec = LiftSpec(q, n, s, r)
            multiplier = binom(n - s, r - s)
            for _ in range(ctx.samples):
                f = random_coloring(n, s, q, rng)
                image_sum = total_sum(apply_lift(spec, f))
                if multiplier % q == 0:
                    tally.check(image_sum == 0,
                                lambda: "%s image sum %d" % (spec, image_sum))
                elif q == 2:
                    tally.check(image_sum == total_sum(f),
                                lambda: "%s image sum %d source sum %d"
                                % (spec, image_sum, total_sum(f)))


def _complement(tally, ctx):
    rng = ctx.rng(tally.name)
    for s, r in ((2, 3), (2, 4), (3, 4)):
        odd = binom(r, s) % 2 == 1
        for n in (5, 6, 7):
            if n > ctx.n_max:
                continue
            spec = LiftSpec(2, n, s, r)
            for _ in range(ctx.samples):
                f = random_coloring(n, s, 2, rng)
                lifted = apply_lift(spec, complement(f))
                expected = apply_lift(spec, f)
                if odd:
                    expected = complement(expected)
                tally.check(lifted == expected,
                            lambda: "%s on %r" % (spec, f.values))


def _no_induced_clique_minus_edge(tally, spec, f):
    g = apply_lift(spec, f)
    for c in (0, 1):
        hit = find_clique_minus_edge(g, c, spec.r + 1, INDUCED)
        tally.check(hit is None,
                    lambda: "%s color %d at %r" % (spec, c, hit))


def _non_occurrence(tally, ctx):
    for n in range(4, ctx.upto(5) + 1):
        spec = LiftSpec(2, n, 2, 3)
        for f in _all_graphs(n):
            _no_induced_clique_minus_edge(tally, spec, f)
    rng = ctx.rng(tally.name)
    for r, n in ((3, 7), (5, 7)):
        if n > ctx.n_max:
            continue
        spec = LiftSpec(2, n, r - 1, r)
        for _ in range(ctx.random_graphs):
            _no_induced_clique_minus_edge(tally, spec,
                                          random_coloring(n, r - 1, 2, rng))


def _mono_subsets(g):
    # Vertex sets of size >= r on which g takes a single color.
    for size in range(g.r, g.n + 1):
        for subset in subsets_iter(range(g.n), size):
            counts = induced_color_counts(g, subset)
            total = binom(size, g.r)
            for c, count in enumerate(counts):
                if count == total:
                    yield subset, c


def _components(tally, ctx):
    fixed_color_misses = [0]

    def inspect_subsets(spec, f):
        g = apply_lift(spec, f)
        for subset, c in _mono_subsets(g):
            count = mono_components(f, subset, c)
            tally.check(count <= spec.r - 1,
                        lambda: "%s S=%r color %d has %d components"
                        % (spec, subset, c, count))
            if mono_components(f, subset, 1) > spec.r - 1:
                fixed_color_misses[0] += 1

    for n in range(3, ctx.upto(6) + 1):
        spec = LiftSpec(2, n, 2, 3)
        for f in _all_graphs(n):
            # Subsets of a smaller graph were already covered exhaustively.
            g = apply_lift(spec, f)
            if len(set(g.values)) != 1:
                continue
            count = mono_components(f, None, g.values[0])
            tally.check(count <= 2,
                        lambda: "%s graph %r has %d components"
                        % (spec, f.values, count))
            if mono_components(f, None, 1) > 2:
                fixed_color_misses[0] += 1
            if g.values[0] == 1:
                tally.check(is_clique_union(f, None, 1, 2),
                            lambda: "%s graph %r is not two cliques"
                            % (spec, f.values))
    rng = ctx.rng(tally.name)
    for n in (7, 8):
        if n > ctx.n_max:
            continue
        spec = LiftSpec(2, n, 4, 5)
        for _ in range(ctx.samples):
            inspect_subsets(spec, random_coloring(n, 4, 2, rng))
    tally.note("components counted in color 1 instead of the image color "
               "exceed r-1 in %d cases" % (fixed_color_misses[0],))


def _classification(tally, ctx):
    limit = ctx.upto(9)
    for total in range(3, limit + 1):
        for s in range(1, total // 2 + 1):
            t = total - s
            bipartite = generate_family("bipartite", s=s, t=t)
            union = generate_family("clique_union", s=s, t=t)
            for r in range(3, total + 1):
                if r % 2:
                    tag = classify_r_behavior(bipartite, r).tag
                    tally.check(tag == VOID,
                                lambda: "bipartite(%d,%d) r=%d is %s"
                                % (s, t, r, tag))
                if r == total:
                    continue
                if r % 2 == 0:
                    expected = NEUTRAL
                elif r % 4 == 1:
                    expected = VOID
                else:
                    expected = COMPLETE
                tag = classify_r_behavior(union, r).tag
                tally.check(tag == expected,
                            lambda: "clique_union(%d,%d) r=%d is %s, "
                            "expected %s" % (s, t, r, tag, expected))
    for r in range(1, 21):
        for u in range(r):
            parity = pair_parity(u, r)
            if r % 4 == 0:
                tally.check(parity == u % 2,
                            lambda: "pair_parity(%d, %d)" % (u, r))
            elif r % 4 == 2:
                tally.check(parity == (u + 1) % 2,
                            lambda: "pair_parity(%d, %d)" % (u, r))
    for n in range(3, ctx.upto(6) + 1):
        for g in _all_graphs(n):
            for r in range(3, n + 1):
                behavior = classify_r_behavior(g, r)
                lifted = set(apply_lift(LiftSpec(2, n, 2, r), g).values)
                consistent = {COMPLETE: lifted == {1},
                              VOID: lifted == {0},
                              NEUTRAL: lifted == {0, 1}}[behavior.tag]
                tally.check(consistent,
                            lambda: "graph %r r=%d classified %s"
                            % (g.values, r, behavior.tag))
            tag = classify_r_behavior(g, 3).tag
            dual = classify_r_behavior(complement(g), 3).tag
            tally.check((tag == COMPLETE) == (dual == VOID),
                        lambda: "graph %r is %s, complement %s"
                        % (g.values, tag, dual))


def _rainbow(tally, ctx):
    rng = ctx.rng(tally.name)
    top = ctx.upto(8)
    if top < 3:
        return
    for _ in range(ctx.random_graphs):
        n = rng.randint(3, top)
        f = random_coloring(n, 2, 3, rng)
        lifted = lift_3coloring(f, 0)
        spec = LiftSpec(2, n, 2, 3)
        merged = apply_lift(spec, HyperedgeColoring(
            n, 2, 2, [1 if v else 0 for v in f.values]))
        zero_lifted = set(i for i, v in enumerate(lifted.values) if v == 0)
        zero_merged = set(i for i, v in enumerate(merged.values) if v == 0)
        tally.check(zero_lifted == zero_merged,
                    lambda: "color 0 of %r" % (f.values,))
        for c in (1, 2):
            single = apply_lift(spec, HyperedgeColoring(
                n, 2, 2, [1 if v == c else 0 for v in f.values]))
            tally.check(all(single.values[i] == 1
                            for i, v in enumerate(lifted.values) if v == c),
                        lambda: "color %d of %r" % (c, f.values))


def _lifted_transfer(tally, base):
    cliques = derive_clique_sizes(base)
    lifted = lift_3coloring(base, 0)
    certificate = verify_avoidance(lifted, avoidance_spec_for(cliques))
    tally.check(certificate.verified,
                lambda: "lifted base: %s" % (certificate.summary(),))


def _blowup_locality(tally, base, copies):
    lifted = lift_3coloring(base, 0)
    blown = blowup_5color(lifted, copies)
    size = base.n
    for e, v in blown.items():
        blocks = len(set(x // size for x in e))
        expected = {2: STRADDLE_TWO, 3: STRADDLE_THREE}.get(blocks)
        ok = v == expected if expected is not None else v < STRADDLE_TWO
        tally.check(ok, lambda: "hyperedge %r has color %d" % (e, v))


def _certify(tally, family, copies, bound):
    certificate = certify_bound(family, copies)
    tally.check(certificate.verified,
                lambda: certificate.summary())
    tally.check(certificate.statement.endswith("> %d" % (bound,)),
                lambda: "statement %r" % (certificate.statement,))
    tally.note(certificate.statement)


def _ramsey_small(tally, ctx):
    pentagon = generate_family("pentagon")
    for color in range(3):
        tally.check(find_mono_clique(pentagon, color, 3) is None,
                    lambda: "pentagon has a color-%d triangle" % (color,))
    _lifted_transfer(tally, pentagon)
    _blowup_locality(tally, pentagon, 3)
    _certify(tally, "pentagon", 3, 15)
    rng = ctx.rng(tally.name)
    top = ctx.upto(7)
    for _ in range(ctx.samples // 20 if top >= 4 else 0):
        n = rng.randint(4, top)
        _lifted_transfer(tally, random_coloring(n, 2, 3, rng))


def _ramsey_gf16(tally, ctx):
    base = generate_family("gf16_3coloring")
    triangles = 0
    for e in subsets_iter(range(base.n), 3):
        colors = set(base.value_of(pair)
                     for pair in itertools.combinations(e, 2))
        triangles += 1
        tally.check(len(colors) > 1,
                    lambda: "monochromatic triangle %r" % (e,))
    tally.note("%d triangles checked" % (triangles,))
    _lifted_transfer(tally, base)
    _certify(tally, "gf16_3coloring", 3, 48)


SUITES = (
    ("linearity", "the lift is linear and agrees with its matrix",
     _linearity),
    ("preimage", "Psi_{2,n}^(2,3) is 2^(n-1)-to-one with cut-graph kernel",
     _preimage),
    ("min-distance", "equal lifts differ on at least n-r+2 hyperedges",
     _min_distance),
    ("sum-law", "image sums vanish when q divides C(n-s,r-s)", _sum_law),
    ("complement", "complements commute with the lift or are absorbed",
     _complement),
    ("non-occurrence", "no induced monochromatic K_{r+1}^(r)-e in images",
     _non_occurrence),
    ("components", "monochromatic images split into at most r-1 pieces",
     _components),
    ("classification", "bipartite and two-clique graphs classify as stated",
     _classification),
    ("rainbow", "the 3-color lift agrees with the merged 2-color lift",
     _rainbow),
    ("ramsey-small", "pentagon blow-up certifies a bound of 15",
     _ramsey_small),
    ("ramsey-paper", "GF(16) blow-up certifies a bound of 48",
     _ramsey_gf16),
)

SUITE_NAMES = tuple(name for name, _, _ in SUITES)


def run_suites(names=None, seed=0, n_max=9, samples=200, random_graphs=500):
    """Run the named suites (all of them by default) in a fixed order."""
    if names is None or names == "all":
        names = SUITE_NAMES
    unknown = set(names) - set(SUITE_NAMES)
    if unknown:
        raise DomainError("unknown suite(s): %s (known: %s)"
                          % (", ".join(sorted(unknown)),
                             ", ".join(SUITE_NAMES)))
    ctx = _Context(seed, n_max, samples, random_graphs)
    results = []
    for name, claim, suite in SUITES:
        if name not in names:
            continue
        tally = _Tally(name, claim)
        suite(tally, ctx)
        result = tally.result()
        logger.info("suite %s: %d cases, %d failures", name, result.cases,
                    result.failures)
        results.append(result)
    return results


def format_report(results):
    """One line per suite plus indented notes, ending with a newline."""
    lines = []
    for result in results:
        status = "FAIL" if result.failures else "PASS"
        lines.append("%s %-14s cases=%d failures=%d  %s"
                     % (status, result.name, result.cases, result.failures,
                        result.claim))
        for detail in result.detail:
            lines.append("    " + detail)
    return "\n".join(lines) + "\n"


__all__ = ["SuiteResult", "SUITE_NAMES", "run_suites", "format_report"]
