#!/usr/bin/env python3
"""Check every generating-function identity and print a per-identity report.

The counting engine supplies the sequences; the identities are compared
coefficientwise in exact rational arithmetic up to the requested order.
"""

import argparse
import json

from tauseq.egf import IDENTITY_NAMES, verify_identity


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=24)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    for name in IDENTITY_NAMES:
        report = verify_identity(name, args.order)
        if args.json:
            print(json.dumps(report.to_json()))
        else:
            status = "ok" if report.holds_everywhere else "MISMATCH"
            print(f"{name:>15}: holds to order {report.holds_to} ({status})")
            if report.first_mismatch is not None:
                k, lhs, rhs = report.first_mismatch
                print(f"{'':>15}  first mismatch at order {k}: {lhs} != {rhs}")


if __name__ == "__main__":
    main()
