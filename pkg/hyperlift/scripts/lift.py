# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to apply the lifting map to a coloring file.

"""

import logging

import hyperlift.scripts
from hyperlift.exceptions import ShapeError
from hyperlift.lifting import LiftSpec, apply_lift


logger = logging.getLogger("hyperlift.scripts.lift")


def lift(in_file, s, r, q=None, out=None):
    f = hyperlift.scripts.load_coloring(in_file)
    if f.r != s:
        raise ShapeError("%s holds an r=%d coloring, not s=%d"
                         % (in_file, f.r, s))
    if q is not None and q != f.q:
        raise ShapeError("%s is colored over F_%d, not F_%d"
                         % (in_file, f.q, q))
    spec = LiftSpec(f.q, f.n, s, r)
    logger.info("Applying %s to %s", spec, in_file)
    g = apply_lift(spec, f)
    hyperlift.scripts.emit_coloring(g, out)
    return g


def main(args=None):
    usage = "--in FILE --s S --r R [--q Q] [--out FILE]"
    descr = "Lift an s-uniform coloring to the r-uniform one"
    parser = hyperlift.scripts.ScriptOptionParser("lift", usage, descr)
    parser.add_option("", "--in", dest="in_file", help="Source coloring")
    parser.add_option("", "--s", type="int", help="Source uniformity")
    parser.add_option("", "--r", type="int", help="Target uniformity")
    parser.add_option("", "--q", type="int",
                      help="Field order (checked against the file)")
    parser.add_option("", "--out", help="Output file (default: stdout)")

    opts, _ = parser.parse_args(args)
    parser.require(opts, "in_file", "s", "r")
    hyperlift.scripts.setup_script(opts)

    lift(opts.in_file, opts.s, opts.r, opts.q, opts.out)
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
