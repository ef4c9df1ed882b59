"""Where do UE and HEE probes land on a 2D four-class problem?

Trains the 2->10->4 MLP on the four elongated Gaussians, runs both probe
constructions for 1..10 unconstrained sign steps of size 1 and reports, for
ten seeds, the final batch-mean entropy, how many class pairs the probes
straddle and how spread out they are. Seed 0's figure data (and a PNG when
matplotlib is present) go to ``--out``.

    python demos/toy_boundary.py --out runs/toy
"""

import argparse
import math

from robsteal.toyboundary import run_toy_boundary


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default="runs/toy")
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--render", action="store_true")
    args = p.parse_args()

    print(f"0.9 ln 4 = {0.9 * math.log(4):.4f}")
    print(f"{'seed':>4} {'UE H@10':>8} {'HEE H@10':>9} {'UE pairs':>9} {'HEE pairs':>10} {'UE spread':>10} {'HEE spread':>11}")
    for seed in range(args.seeds):
        stats = run_toy_boundary(("ue", "hee"), 10, seed, args.out if seed == 0 else None,
                                 render=args.render and seed == 0)
        ue, hee = stats["ue"], stats["hee"]
        print(f"{seed:>4} {ue['entropy'][-1]:>8.4f} {hee['entropy'][-1]:>9.4f} {ue['coverage']:>9} "
              f"{hee['coverage']:>10} {ue['spread']:>10.4f} {hee['spread']:>11.4f}")
    print(f"figure data for seed 0 in {args.out}")


if __name__ == "__main__":
    main()
