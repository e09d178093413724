#!/usr/bin/env python3
"""
Launch script for the cubic surface moduli embedding toolkit.

    python launch.py eval --x 2,3,4,5
    python launch.py verify all --samples 10
"""
import os
import sys


def main():
    """Run the command line interface from the repository root."""
    script_dir = os.path.dirname(os.path.abspath(__file__))
    if script_dir not in sys.path:
        sys.path.insert(0, script_dir)

    from src.cli import main as cli_main

    try:
        sys.exit(cli_main())
    except KeyboardInterrupt:
        sys.stderr.write("\nInterrupted\n")
        sys.exit(130)


if __name__ == "__main__":
    main()
