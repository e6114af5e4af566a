"""Run the command-line tool with ``python -m levy_foraging``."""

import sys

from .cli import main


sys.exit(main())
