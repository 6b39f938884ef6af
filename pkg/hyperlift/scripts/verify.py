# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to check a coloring against an avoidance spec.

Without --avoid the targets recorded in the file's ``# CERT`` line are
used, so a certificate written by ``certify`` can be re-checked as is.

"""

import sys
import logging

import hyperlift.scripts
from hyperlift.ramsey import (parse_avoidance_spec, read_certificate,
                              verify_avoidance)


logger = logging.getLogger("hyperlift.scripts.verify")


def verify(in_file, avoid=None):
    """Print the certificate summary and return the Certificate."""
    if avoid is None:
        certificate, claimed = read_certificate(
            hyperlift.scripts.read_text(in_file))
        if claimed != certificate.verified:
            sys.stdout.write("claimed: %s\n" % ("true" if claimed
                                                 else "false",))
    else:
        spec = parse_avoidance_spec(avoid)
        coloring = hyperlift.scripts.load_coloring(in_file)
        certificate = verify_avoidance(coloring, spec)
    sys.stdout.write(certificate.summary() + "\n")
    return certificate


def main(args=None):
    usage = "--in FILE [--avoid SPEC]"
    descr = "Verify that a coloring avoids the given monochromatic patterns"
    parser = hyperlift.scripts.ScriptOptionParser("verify", usage, descr)
    parser.add_option("", "--in", dest="in_file", help="Coloring file")
    parser.add_option("", "--avoid",
                      help="Targets, e.g. 0:cliqueminus:5:contains,1:clique:5")

    opts, _ = parser.parse_args(args)
    parser.require(opts, "in_file")
    hyperlift.scripts.setup_script(opts)

    certificate = verify(opts.in_file, opts.avoid)
    if not certificate.verified:
        return hyperlift.scripts.EXIT_VIOLATION
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
