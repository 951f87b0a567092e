#!/usr/bin/env python3
"""Regenerate all experiment CSVs (fig3, fig5, fig6, appc).

--quick drops the Monte Carlo kinds to 100 trials and trims the fig5 grid;
the full run uses the 1000-trial defaults and takes correspondingly longer.
"""

import argparse
import sys
import time
from pathlib import Path

from uav_recharge.experiments import default_spec, run_experiment, write_rows_csv


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--quick", action="store_true", help="100-trial CI scale")
    args = parser.parse_args(argv)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    overrides: dict[str, dict] = {"fig3": {}, "fig5": {}, "fig6": {}, "appc": {}}
    if args.quick:
        for kind in ("fig5", "fig6", "appc"):
            overrides[kind]["trials"] = 100
        overrides["fig5"]["n_values"] = tuple(range(1, 16))

    for kind in ("fig3", "fig5", "fig6", "appc"):
        spec = default_spec(kind, seed=args.seed, **overrides[kind])
        started = time.monotonic()
        rows, _ = run_experiment(spec)
        path = out_dir / f"{kind}.csv"
        write_rows_csv(rows, path)
        print(f"{kind}: {len(rows)} rows -> {path} ({time.monotonic() - started:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
