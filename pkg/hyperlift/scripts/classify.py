# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to classify a graph as r-complete, r-void or r-neutral.

"""

import sys
import logging

import hyperlift.scripts
from hyperlift.structure import classify_r_behavior


logger = logging.getLogger("hyperlift.scripts.classify")


def format_behavior(behavior):
    line = behavior.tag
    if behavior.witness_odd is not None:
        line += " odd=%r" % (behavior.witness_odd,)
    if behavior.witness_even is not None:
        line += " even=%r" % (behavior.witness_even,)
    return line


def classify(graph_file, r):
    g = hyperlift.scripts.load_coloring(graph_file)
    behavior = classify_r_behavior(g, r)
    sys.stdout.write(format_behavior(behavior) + "\n")
    return behavior


def main(args=None):
    usage = "--graph FILE --r R"
    descr = "Classify a graph by the parity of its induced r-subgraphs"
    parser = hyperlift.scripts.ScriptOptionParser("classify", usage, descr)
    parser.add_option("", "--graph", help="Graph as a 2-uniform F_2 coloring")
    parser.add_option("", "--r", type="int", help="Induced subgraph order")

    opts, _ = parser.parse_args(args)
    parser.require(opts, "graph", "r")
    hyperlift.scripts.setup_script(opts)

    classify(opts.graph, opts.r)
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
