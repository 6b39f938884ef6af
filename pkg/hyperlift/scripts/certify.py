# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to run the whole lower-bound pipeline and write a certificate.

The base is either a named family or an externally found 3-colored graph
(--base).  With --bounds, the statements implied by the known 3-color
graph Ramsey numbers are printed instead.

"""

import sys
import logging

import hyperlift.scripts
from hyperlift.exceptions import UsageError
from hyperlift.ramsey import certify_bound, bound_table, write_certificate
from hyperlift.structure import generate_family


logger = logging.getLogger("hyperlift.scripts.certify")


def certify(base, copies, rainbow_color=0, out=None):
    """Certify from a family name or a base coloring; return the result."""
    certificate = certify_bound(base, copies, rainbow_color=rainbow_color)
    sys.stdout.write(certificate.summary() + "\n")
    if out is not None:
        hyperlift.scripts.emit(write_certificate(certificate), out)
    return certificate


def main(args=None):
    usage = "(--family NAME [--params k=v,...] | --base FILE) --copies Q " \
            "[--out FILE] | --bounds --copies Q"
    descr = "Build and verify a 5-color lower-bound certificate"
    parser = hyperlift.scripts.ScriptOptionParser("certify", usage, descr)
    parser.add_option("", "--family", help="Base family name")
    parser.add_option("", "--params", help="Family parameters, k=v,...")
    parser.add_option("", "--base", help="Base 3-colored graph file")
    parser.add_option("", "--copies", type="int", help="Number of copies")
    parser.add_option("", "--rainbow-color", type="int",
                      help="Color given to rainbow triangles")
    parser.add_option("", "--bounds", action="store_true", default=False,
                      help="Print the implied bounds for known bases")
    parser.add_option("", "--out", help="Where to write the certificate")

    opts, _ = parser.parse_args(args)
    parser.require(opts, "copies")
    settings = hyperlift.scripts.setup_script(opts)

    if opts.bounds:
        for row in bound_table(opts.copies):
            sys.stdout.write(row + "\n")
        return 0
    if (opts.family is None) == (opts.base is None):
        raise UsageError("give exactly one of --family and --base")
    if opts.family is not None:
        base = generate_family(opts.family,
                               **hyperlift.scripts.parse_params(opts.params))
    else:
        base = hyperlift.scripts.load_coloring(opts.base)
    rainbow = opts.rainbow_color
    if rainbow is None:
        rainbow = settings["hyperlift.rainbow_color"]

    certificate = certify(base, opts.copies, rainbow, opts.out)
    if not certificate.verified:
        return hyperlift.scripts.EXIT_VIOLATION
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
