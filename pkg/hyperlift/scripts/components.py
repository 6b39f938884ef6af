# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to count the monochromatic components of a coloring.

"""

import sys
import logging

import hyperlift.scripts
from hyperlift.structure import component_sets


logger = logging.getLogger("hyperlift.scripts.components")


def components(in_file, color, subset=None):
    f = hyperlift.scripts.load_coloring(in_file)
    groups = component_sets(f, subset, color)
    for group in groups:
        logger.info("component %r", group)
    sys.stdout.write("components=%d\n" % (len(groups),))
    return len(groups)


def main(args=None):
    usage = "--in FILE --color C [--subset v1,v2,...]"
    descr = "Count connected components of one color class"
    parser = hyperlift.scripts.ScriptOptionParser("components", usage, descr)
    parser.add_option("", "--in", dest="in_file", help="Coloring file")
    parser.add_option("", "--color", type="int", help="Color to follow")
    parser.add_option("", "--subset",
                      help="Vertices to restrict to (default: all)")

    opts, _ = parser.parse_args(args)
    parser.require(opts, "in_file", "color")
    hyperlift.scripts.setup_script(opts)

    subset = None
    if opts.subset is not None:
        subset = hyperlift.scripts.parse_int_list(opts.subset)
    components(opts.in_file, opts.color, subset)
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
