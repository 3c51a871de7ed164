"""Entry point for ``python -m holofourier``."""

import sys

from holofourier.cli.main import main

sys.exit(main())
