# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to print the rank, kernel dimension and preimage count of a lift.

"""

import sys
import logging

import hyperlift.scripts
from hyperlift.lifting import LiftSpec, rank_kernel


logger = logging.getLogger("hyperlift.scripts.rank")


def rank(n, s, r, q, max_rows):
    spec = LiftSpec(q, n, s, r)
    summary = rank_kernel(spec, max_rows)
    logger.info("%s: %d x %d matrix", spec, spec.target_dim, spec.source_dim)
    sys.stdout.write("rank=%d kernel=%d preimages=%d\n"
                     % (summary.rank, summary.kernel_dim,
                        summary.preimage_count))
    return summary


def main(args=None):
    usage = "--n N --s S --r R --q Q [--max-rows ROWS]"
    descr = "Print rank, kernel dimension and preimage count of the lift"
    parser = hyperlift.scripts.ScriptOptionParser("rank", usage, descr)
    parser.add_option("", "--n", type="int", help="Number of vertices")
    parser.add_option("", "--s", type="int", help="Source uniformity")
    parser.add_option("", "--r", type="int", help="Target uniformity")
    parser.add_option("", "--q", type="int", help="Field order")
    parser.add_option("", "--max-rows", type="int",
                      help="Largest lifting matrix to build")

    opts, _ = parser.parse_args(args)
    parser.require(opts, "n", "s", "r", "q")
    settings = hyperlift.scripts.setup_script(opts)

    max_rows = opts.max_rows or settings["hyperlift.max_matrix_rows"]
    rank(opts.n, opts.s, opts.r, opts.q, max_rows)
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
