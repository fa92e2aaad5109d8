"""Allow ``python -m pauliq`` as an alias for the ``pauliq`` script."""

import sys

from .cli import main

sys.exit(main())
