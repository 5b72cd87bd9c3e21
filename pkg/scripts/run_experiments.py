#!/usr/bin/env python3
"""Run the full chronon experiment battery into results/full-run/.

Thin wrapper over ``chronon all`` so the canonical output set (report,
manifest, CSV tables, SVG plots) can be regenerated with one command:

    python3 scripts/run_experiments.py [extra chronon flags...]
"""

import sys

from chronon.cli import main

if __name__ == "__main__":
    argv = ["all", "--output-dir", "results/full-run"] + sys.argv[1:]
    sys.exit(main(argv))
