#!/usr/bin/env python
"""CLI for torsion-sections; see ``torsion --help``."""

import sys

from torsion_sections.cli import main

if __name__ == "__main__":
    sys.exit(main())
