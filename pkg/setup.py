# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
from setuptools import setup, find_packages


requires = ['numpy', 'zope.interface', 'konfig', 'testfixtures']


setup(name='hyperlift',
      version='0.3.0',
      description='Hypergraph lifting maps and Ramsey lower-bound '
                  'certificates',
      packages=find_packages(),
      include_package_data=True,
      zip_safe=False,
      python_requires='>=3.8',
      entry_points="""\
      [console_scripts]
      hyperlift = hyperlift.scripts:main
      """,
      install_requires=requires,
      tests_require=requires,
      test_suite='hyperlift.tests')
