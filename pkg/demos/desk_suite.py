"""Desk-scale robustness stealing on a 5k-sample CIFAR-10 subset.

1. Train a standard and a PGD-AT small CNN target and compare their clean
   and PGD-20 accuracy.
2. Steal the PGD-AT target with each query strategy (AT, UE, AE, HEE) under
   one shared query budget, data-free, and compare the clones.
3. Use the HEE clone as a surrogate for transfer attacks at 4/8/12 per 255.

Every stage is cached under ``runs/desk`` (override with ROBSTEAL_CACHE);
rerunning only reads the cache. A cold run takes a few hours on one CPU.

    python demos/desk_suite.py
"""

import argparse
import logging

from robsteal.advtest import AttackSpec, evaluate
from robsteal.harness import experiments as ex


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(asctime)s %(message)s")

    _, heldout = ex.desk_data()
    print("targets (clean / PGD-20 on 1000 held-out images)")
    for scheme in ("standard", "pgd_at"):
        model, _ = ex.desk_target(scheme)
        rep = evaluate(model, heldout, [AttackSpec.pgd(20)])
        print(f"  {scheme:8s} {rep.clean_acc:6.2f} / {rep.robust_acc['pgd20']:6.2f}")

    results = ex.query_comparison()
    print("clones of the PGD-AT target")
    for r in results:
        print(f"  {r['strategy']:4s} clean {r['clean_acc']:6.2f}  PGD-20 {r['pgd20_acc']:6.2f}  "
              f"avg {r['average']:6.2f}  queries {r['queries_used']:,}")
    for name, (ok, detail) in ex.ordering_checks({r["strategy"]: r for r in results}).items():
        print(f"  {name}: {'yes' if ok else 'no'} ({detail})")
    table = ex.write_table(ex.query_comparison_rows(results), ex.cache_root() / "query-comparison.csv",
                           ex.QUERY_COMPARISON_COLUMNS, scale="toy")

    hee = next(r for r in results if r["strategy"] == "HEE")
    rows = ex.transfer_curve(hee)
    print("transfer ASR of the HEE clone against the target")
    for r in rows:
        print(f"  eps {r['epsilon_255']:5.1f}/255  ASR {r['asr']:6.2f}  noise {r['noise_asr']:6.2f}")
    ex.write_table(rows, ex.cache_root() / "transfer.csv", ex.TRANSFER_COLUMNS, scale="toy")
    print(f"tables in {table.parent}")


if __name__ == "__main__":
    main()
