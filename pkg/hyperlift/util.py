# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
import os
import logging
import logging.config

from konfig import Config

from hyperlift.exceptions import UsageError


logger = logging.getLogger("hyperlift.util")

SETTINGS_SECTIONS = ("hyperlift", "check")

DEFAULT_SETTINGS = {
    "hyperlift.max_matrix_rows": 200000,
    "hyperlift.kernel_weight_budget": 2 ** 20,
    "hyperlift.rainbow_color": 0,
    "check.seed": 0,
    "check.n_max": 9,
    "check.samples": 200,
    "check.random_graphs": 500,
}


def find_config_file(*paths):
    """Return the first existing ini file, or None if there is none."""
    ini_files = []
    ini_files.append(os.environ.get('HYPERLIFT_INI'))
    ini_files.extend(paths)
    ini_files.append('/etc/hyperlift/hyperlift.ini')
    for ini_file in ini_files:
        if ini_file is not None:
            ini_file = os.path.abspath(ini_file)
            if os.path.exists(ini_file):
                return ini_file
    return None


def load_settings(config_file=None):
    """Read a flat "section.option" settings dict, over the defaults.

    An explicitly named config file must exist; otherwise the usual
    locations are searched and the defaults are used if none is found.
    """
    settings = dict(DEFAULT_SETTINGS)
    if config_file is not None:
        if not os.path.exists(config_file):
            raise UsageError("config file %r does not exist" % (config_file,))
    else:
        config_file = find_config_file()
        if config_file is None:
            return settings
    logger.debug("Using config file %r", config_file)
    config = Config(config_file)
    for section in SETTINGS_SECTIONS:
        if not config.has_section(section):
            continue
        for option, value in config.get_map(section).items():
            key = "%s.%s" % (section, option)
            if key in DEFAULT_SETTINGS:
                try:
                    value = int(value)
                except (TypeError, ValueError):
                    raise UsageError("setting %s must be an integer, "
                                     "got %r" % (key, value))
            settings[key] = value
    if config.has_section('loggers'):
        logging.config.fileConfig(config_file,
                                  disable_existing_loggers=False)
    return settings
