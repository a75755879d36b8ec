#!/usr/bin/env python3
"""Cross-entropy search demo: minimize hyperbolic distance to a target point.

Prints the trace (location, concentration, best value) and the final error.
"""

import argparse

from hypdisc import CemConfig, DiscPoint, RngStream, cem_optimize, hyp_distance


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--target", default="0.4,-0.2", help="RE,IM inside the unit disc")
    parser.add_argument("--pop", type=int, default=200)
    parser.add_argument("--iters", type=int, default=40)
    parser.add_argument("--alpha0", type=float, default=2.0)
    parser.add_argument("--alpha-growth", type=float, default=1.15, dest="alpha_growth")
    parser.add_argument("--elite-frac", type=float, default=0.2, dest="elite_frac")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    re, im = (float(x) for x in args.target.split(","))
    target = DiscPoint(re, im)
    cfg = CemConfig(
        population=args.pop,
        elite_frac=args.elite_frac,
        iterations=args.iters,
        alpha0=args.alpha0,
        alpha_growth=args.alpha_growth,
    )
    best, trace = cem_optimize(lambda p: hyp_distance(p, target), cfg, RngStream(args.seed))

    print(f"{'iter':>4}  {'a_re':>12}  {'a_im':>12}  {'alpha':>10}  {'best':>12}")
    for it in trace:
        print(
            f"{it.iteration:4d}  {it.location.re:12.8f}  {it.location.im:12.8f}"
            f"  {it.alpha:10.2f}  {it.best_value:12.3e}"
        )
    print(f"\nbest point: ({best.re:.10f}, {best.im:.10f})")
    print(f"distance of final location to target: {hyp_distance(trace[-1].location, target):.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
