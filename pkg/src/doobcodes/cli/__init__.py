#  Copyright (c) doobcodes contributors 2026. All Rights Reserved.
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at:
#
#       https://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
#  or implied. See the License for the specific language governing
#  permissions and limitations under the License.
"""
doobcodes CLI
=============

The ``doobcodes`` command is installed together with the package. To find
out which version you are running, type:

```bash
   doobcodes version
```

Use ``--help`` on the group or on any command to see its options:

```bash
   doobcodes --help
   doobcodes classify-hamming --help
```

Working with single codes
-------------------------

Codes are read from files in the plain-text code format (a ``shape m n' n''``
or ``gf4 n`` header followed by generator rows). To print the weight
distribution of a code, its dual or the MacWilliams transform of a
distribution:

```bash
   doobcodes weights b1.codes --metric doob
   doobcodes dual b1.codes --form doob --out b1_dual.codes
   doobcodes macwilliams --wd 0:1,6:198,8:495,10:330 -n 11 --size 1024
```

``equiv`` tells whether two codes are equivalent; ``coset-graph`` builds the
coset graph of a code (``--srg`` checks strong regularity, ``--export``
writes an adjacency list) and ``intersection-array`` runs a breadth-first
search over the ambient. ``graph-classes`` groups the coset graphs of many
codes into isomorphism classes.

Campaigns
---------

```bash
   doobcodes classify-hamming -d 3 -n 6
   doobcodes classify-hamming -d 5 --target 11,12 --out d5
   doobcodes classify-doob -m 4 --nprime 1 --ndouble 0 --weights 6,8
   doobcodes classify-doob --diameter9
   doobcodes lengthen11
   doobcodes lift12
   doobcodes dodecacode
   doobcodes verify-corpus --strict
```

Global options come before the command: ``--threads N`` sets the number of
worker threads, ``--budget NAME=N`` (repeatable) changes a limit such as
``span`` or ``ambient``, ``--seed-order`` chooses the order in which classes
are expanded, ``--config FILE`` reads campaign settings from YAML and
``--csv`` writes tables as comma-separated text.

The exit code is 0 on success, 1 when a check fails, 2 on a usage error and
3 when a budget is exhausted.
"""

from doobcodes.cli.campaigns import *  # noqa
from doobcodes.cli.codes import *  # noqa
from doobcodes.cli.corpus import *  # noqa
from doobcodes.cli.graphs import *  # noqa
from doobcodes.cli.version import *  # noqa
