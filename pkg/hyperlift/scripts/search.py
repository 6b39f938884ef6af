# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to search a coloring for a monochromatic clique or clique minus
one hyperedge.  Prints the lexicographically least witness, or NONE.

"""

import sys
import logging

import hyperlift.scripts
from hyperlift.exceptions import UsageError
from hyperlift.ramsey import CLIQUE, PATTERNS
from hyperlift.structure import (INDUCED, CONTAINS, find_mono_clique,
                                 find_clique_minus_edge)


logger = logging.getLogger("hyperlift.scripts.search")


def format_hit(hit):
    if hit is None:
        return "NONE"
    line = "%r" % (hit.vertices,)
    if hit.missing is not None:
        line += " missing=%r" % (hit.missing,)
    return line


def search(in_file, color, pattern, m, induced=False):
    f = hyperlift.scripts.load_coloring(in_file)
    if pattern == CLIQUE:
        if induced:
            raise UsageError("--induced only applies to cliqueminus")
        hit = find_mono_clique(f, color, m)
    else:
        mode = INDUCED if induced else CONTAINS
        hit = find_clique_minus_edge(f, color, m, mode)
    sys.stdout.write(format_hit(hit) + "\n")
    return hit


def main(args=None):
    usage = "--in FILE --color C --pattern clique|cliqueminus --m M " \
            "[--induced]"
    descr = "Search for a monochromatic pattern"
    parser = hyperlift.scripts.ScriptOptionParser("search", usage, descr)
    parser.add_option("", "--in", dest="in_file", help="Coloring file")
    parser.add_option("", "--color", type="int", help="Color to search in")
    parser.add_option("", "--pattern", type="choice", choices=PATTERNS,
                      help="clique or cliqueminus")
    parser.add_option("", "--m", type="int", help="Number of vertices")
    parser.add_option("", "--induced", action="store_true", default=False,
                      help="Require exactly one missing hyperedge")

    opts, _ = parser.parse_args(args)
    parser.require(opts, "in_file", "color", "pattern", "m")
    hyperlift.scripts.setup_script(opts)

    search(opts.in_file, opts.color, opts.pattern, opts.m, opts.induced)
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
