"""Convenience entrypoint for running the CLI from a source checkout."""

import sys

from jack_vertex import main as run_cli


if __name__ == "__main__":
    sys.exit(run_cli())
