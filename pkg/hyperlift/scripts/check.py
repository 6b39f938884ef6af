# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Script to run the property suites and print a pass/fail table.

"""

import sys
import logging

import hyperlift.scripts
from hyperlift.checks import SUITE_NAMES, run_suites, format_report


logger = logging.getLogger("hyperlift.scripts.check")


def check(names, seed, n_max, samples, random_graphs):
    """Run the suites, print the report and return the results."""
    results = run_suites(names, seed=seed, n_max=n_max, samples=samples,
                         random_graphs=random_graphs)
    sys.stdout.write(format_report(results))
    return results


def main(args=None):
    usage = "--suite NAME[,NAME...]|all [--seed SEED] [--n-max N] " \
            "[--samples K] [--random-graphs K]"
    descr = "Run property suites (%s)" % (", ".join(SUITE_NAMES),)
    parser = hyperlift.scripts.ScriptOptionParser("check", usage, descr)
    parser.add_option("", "--suite", default="all",
                      help="Comma-separated suite names, or all")
    parser.add_option("", "--seed", type="int", help="Random seed")
    parser.add_option("", "--n-max", type="int",
                      help="Largest vertex count for exhaustive work")
    parser.add_option("", "--samples", type="int",
                      help="Random samples per configuration")
    parser.add_option("", "--random-graphs", type="int",
                      help="Random colorings for the search-based suites")

    opts, _ = parser.parse_args(args)
    settings = hyperlift.scripts.setup_script(opts)

    def pick(value, key):
        return settings[key] if value is None else value

    names = None
    if opts.suite != "all":
        names = [name.strip() for name in opts.suite.split(",")]
    results = check(names, pick(opts.seed, "check.seed"),
                    pick(opts.n_max, "check.n_max"),
                    pick(opts.samples, "check.samples"),
                    pick(opts.random_graphs, "check.random_graphs"))
    if any(result.failures for result in results):
        return hyperlift.scripts.EXIT_VIOLATION
    return 0


if __name__ == "__main__":
    hyperlift.scripts.run_script(main)
