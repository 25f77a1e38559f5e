"""Run the linked-list sorting benchmark: ``python main.py --help``."""
import sys

from bench_cli.cli import main

if __name__ == "__main__":
    sys.exit(main())
