"""Reproduce the failure-rate table at a small scale and write it as CSV.

Pass a scale factor to run more trials, e.g. ``python3 04_failure_rate_table.py 0.2``.
The q=7 rows take a second or two per trial.
"""

import sys

from hermitian_ipd.simulator import default_rows, format_rows, reproduce_table

scale = float(sys.argv[1]) if len(sys.argv) > 1 else 0.05
rows = reproduce_table(default_rows(seed=0, scale=scale))
print(format_rows(rows, "csv"), end="")
