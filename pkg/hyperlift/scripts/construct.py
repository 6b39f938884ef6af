# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to lift a 3-colored graph and blow it up into a 5-coloring.

No verification is done here; use ``verify`` or ``certify`` for that.

"""

import logging

import hyperlift.scripts
from hyperlift.ramsey import lift_3coloring, blowup_5color


logger = logging.getLogger("hyperlift.scripts.construct")


def construct(base_file, copies, rainbow_color=0, out=None):
    base = hyperlift.scripts.load_coloring(base_file)
    lifted = lift_3coloring(base, rainbow_color)
    blown = blowup_5color(lifted, copies)
    logger.info("Built %d copies of a %d-vertex lift", copies, base.n)
    hyperlift.scripts.emit_coloring(blown, out)
    return blown


def main(args=None):
    usage = "--base FILE --copies Q [--rainbow-color D] [--out FILE]"
    descr = "Lift a 3-colored graph and blow it up into copies"
    parser = hyperlift.scripts.ScriptOptionParser("construct", usage, descr)
    parser.add_option("", "--base", help="3-colored base graph")
    parser.add_option("", "--copies", type="int", help="Number of copies")
    parser.add_option("", "--rainbow-color", type="int",
                      help="Color given to rainbow triangles")
    parser.add_option("", "--out", help="Output file (default: stdout)")

    opts, _ = parser.parse_args(args)
    parser.require(opts, "base", "copies")
    settings = hyperlift.scripts.setup_script(opts)

    rainbow = opts.rainbow_color
    if rainbow is None:
        rainbow = settings["hyperlift.rainbow_color"]
    construct(opts.base, opts.copies, rainbow, opts.out)
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
