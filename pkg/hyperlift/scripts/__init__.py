# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Command-line tools for hyperlift.

Every verb lives in its own module with a main(args) entry-point, so each
can also be run on its own with ``python -m``.  The ``hyperlift`` console
script dispatches on the first argument and turns errors into exit codes:

    0  success / verified
    1  violation or non-membership
    2  usage, parse or domain error
    3  resource limit exceeded

"""

import sys
import logging
import optparse
import importlib

from hyperlift.colorings import read_coloring, write_coloring
from hyperlift.exceptions import (HyperliftError, UsageError,
                                  ColoringParseError, ResourceLimitError,
                                  CertificateError)
from hyperlift.util import load_settings


logger = logging.getLogger("hyperlift.scripts")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

VERBS = ("gen", "lift", "rank", "solve", "classify", "components", "search",
         "construct", "verify", "certify", "check")

_handler = None


def run_script(main):
    """Simple wrapper for running scripts in __main__ section."""
    try:
        exitcode = run_guarded(main, sys.argv[1:])
    except KeyboardInterrupt:
        exitcode = 1
    sys.exit(exitcode)


def configure_script_logging(opts=None):
    """Configure stdlib logging to produce output from the script.

    Messages go to stderr, formatted for people rather than machines.  The
    level follows the -v/--verbose count.  Calling this again replaces the
    handler installed by the previous call.
    """
    global _handler
    if not opts or not opts.verbosity:
        loglevel = logging.WARNING
    elif opts.verbosity == 1:
        loglevel = logging.INFO
    else:
        loglevel = logging.DEBUG

    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("%(message)s"))
    handler.setLevel(loglevel)
    logger = logging.getLogger("")
    if _handler is not None:
        logger.removeHandler(_handler)
    logger.addHandler(handler)
    logger.setLevel(loglevel)
    _handler = handler


class ScriptOptionParser(optparse.OptionParser):
    """An OptionParser that raises UsageError instead of exiting."""

    def __init__(self, verb, usage, description):
        optparse.OptionParser.__init__(
            self, prog="hyperlift %s" % (verb,),
            usage="usage: %prog " + usage, description=description)
        self.add_option("", "--config", help="Settings file (ini format)")
        self.add_option("-v", "--verbose", action="count", dest="verbosity",
                        help="Control verbosity of log messages")

    def error(self, msg):
        raise UsageError(msg)

    def parse_args(self, args=None, values=None):
        opts, rest = optparse.OptionParser.parse_args(self, args, values)
        if rest:
            raise UsageError("unexpected arguments: %s" % (" ".join(rest),))
        return opts, rest

    def require(self, opts, *names):
        for name in names:
            if getattr(opts, name) is None:
                raise UsageError("--%s is required" % (name.replace("_", "-"),))


def setup_script(opts):
    """Configure logging and return the settings for a parsed command."""
    configure_script_logging(opts)
    return load_settings(opts.config)


def parse_int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError("expected comma-separated integers, got %r" % (text,))


def parse_params(text):
    """Parse ``k=v,k=v`` family parameters into a dict."""
    params = {}
    for item in (text or "").split(","):
        if not item.strip():
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError("malformed parameter %r, expected k=v" % (item,))
        params[key.strip()] = value.strip()
    return params


def read_text(path):
    """Return the UTF-8 text of path; undecodable bytes are a parse error."""
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise ColoringParseError("%s is not UTF-8 text" % (path,), line,
                                 column)


def load_coloring(path):
    return read_coloring(read_text(path))


def emit(text, path=None):
    """Write text to path, or to stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)
        logger.info("Wrote %s", path)


def emit_coloring(coloring, path=None):
    emit(write_coloring(coloring), path)


def run_guarded(main, args):
    """Run a verb's main() and map errors onto exit codes."""
    try:
        return main(args)
    except UsageError as e:
        sys.stderr.write("hyperlift: usage error: %s\n" % (e,))
        return EXIT_USAGE
    except ResourceLimitError as e:
        sys.stderr.write("hyperlift: resource limit: %s\n" % (e,))
        return EXIT_RESOURCE
    except CertificateError as e:
        sys.stdout.write("violation: %s\n" % (e,))
        return EXIT_VIOLATION
    except (HyperliftError, IOError) as e:
        sys.stderr.write("hyperlift: error: %s\n" % (e,))
        return EXIT_USAGE
    except Exception:
        logger.exception("Unexpected error")
        return EXIT_USAGE


def run_command(argv):
    """Dispatch ``<verb> [options]`` to the verb's main() and return a code."""
    if not argv or argv[0] in ("-h", "--help"):
        sys.stderr.write("usage: hyperlift <verb> [options]\n"
                         "verbs: %s\n" % (", ".join(VERBS),))
        return EXIT_USAGE
    verb, args = argv[0], list(argv[1:])
    if verb not in VERBS:
        sys.stderr.write("hyperlift: unknown verb %r (known: %s)\n"
                         % (verb, ", ".join(VERBS)))
        return EXIT_USAGE
    module = importlib.import_module("hyperlift.scripts.%s" % (verb,))
    return run_guarded(module.main, args)


def main(args=None):
    """Entry-point for the ``hyperlift`` console script."""
    if args is None:
        args = sys.argv[1:]
    try:
        exitcode = run_command(args)
    except KeyboardInterrupt:
        exitcode = 1
    sys.exit(exitcode)
