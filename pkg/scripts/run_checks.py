#!/usr/bin/env python3
"""Run the full machine-verification suite and exit nonzero on any failure.

Equivalent to ``g2models check``; kept as a script so the suite can be driven
without installing the console entry point.
"""

import sys

from g2models.cli import main

if __name__ == "__main__":
    sys.exit(main(["check", *sys.argv[1:]]))
