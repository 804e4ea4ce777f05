"""Allow running the lab with python -m jack_vertex."""

import sys

from .cli import main


if __name__ == "__main__":
    sys.exit(main())
