#!/usr/bin/env python3
"""Write the counting tables of all four families as CSV files."""

import argparse
import pathlib

from tauseq.counting import FAMILY_KEYS, sequence_table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=15)
    parser.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("tables"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for key in FAMILY_KEYS:
        rows = sequence_table(key, args.n_max)
        path = args.out_dir / f"{key}.csv"
        with path.open("w") as out:
            out.write("n,count\n")
            for n, value in enumerate(rows, start=1):
                out.write(f"{n},{value}\n")
        print(f"wrote {path} ({args.n_max} rows)")


if __name__ == "__main__":
    main()
