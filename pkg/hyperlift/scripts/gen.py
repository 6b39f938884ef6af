# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to generate one of the named graph colorings.

"""

import logging

import hyperlift.scripts
from hyperlift.structure import FAMILIES, generate_family


logger = logging.getLogger("hyperlift.scripts.gen")


def gen(family, params, out=None):
    """Generate the family member and write it as a coloring file."""
    logger.info("Generating %s with %r", family, params)
    coloring = generate_family(family, **params)
    hyperlift.scripts.emit_coloring(coloring, out)
    return coloring


def main(args=None):
    """Main entry-point for running this script.

    This function parses command-line arguments and passes them on
    to the gen() function.
    """
    usage = "--family NAME [--params k=v,...] [--out FILE]"
    descr = "Generate a named graph coloring (%s)" % (
        ", ".join(sorted(FAMILIES)),)
    parser = hyperlift.scripts.ScriptOptionParser("gen", usage, descr)
    parser.add_option("", "--family", help="Family name")
    parser.add_option("", "--params", help="Family parameters, k=v,...")
    parser.add_option("", "--out", help="Output file (default: stdout)")

    opts, _ = parser.parse_args(args)
    parser.require(opts, "family")
    hyperlift.scripts.setup_script(opts)

    gen(opts.family, hyperlift.scripts.parse_params(opts.params), opts.out)
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
