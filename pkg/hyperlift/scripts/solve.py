# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to decide whether a coloring is a lift, and find a preimage.

Prints ``member=yes preimages=<k>`` and exits 0 when the target is in the
image, or ``member=no reason=inconsistent`` and exits 1 when it is not.

"""

import sys
import logging

import hyperlift.scripts
from hyperlift.lifting import (DEFAULT_MAX_ROWS, LiftSpec, solve_preimage,
                               rank_kernel)


logger = logging.getLogger("hyperlift.scripts.solve")


def solve(target_file, s, out=None, max_rows=DEFAULT_MAX_ROWS):
    """Return the preimage found for the target, or None."""
    g = hyperlift.scripts.load_coloring(target_file)
    spec = LiftSpec(g.q, g.n, s, g.r)
    f = solve_preimage(spec, g, max_rows)
    if f is None:
        sys.stdout.write("member=no reason=inconsistent\n")
        return None
    summary = rank_kernel(spec, max_rows)
    sys.stdout.write("member=yes preimages=%d\n" % (summary.preimage_count,))
    if out is not None:
        hyperlift.scripts.emit_coloring(f, out)
    return f


def main(args=None):
    usage = "--target FILE --s S [--out FILE]"
    descr = "Decide membership in the image of the lift"
    parser = hyperlift.scripts.ScriptOptionParser("solve", usage, descr)
    parser.add_option("", "--target", help="Target r-uniform coloring")
    parser.add_option("", "--s", type="int", help="Source uniformity")
    parser.add_option("", "--out", help="Where to write a preimage")
    parser.add_option("", "--max-rows", type="int",
                      help="Largest lifting matrix to build")

    opts, _ = parser.parse_args(args)
    parser.require(opts, "target", "s")
    settings = hyperlift.scripts.setup_script(opts)

    max_rows = opts.max_rows or settings["hyperlift.max_matrix_rows"]
    if solve(opts.target, opts.s, opts.out, max_rows) is None:
        return hyperlift.scripts.EXIT_VIOLATION
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
