#!/usr/bin/env python3
"""Emit scatter data for the disc family at a few (alpha, a) combinations.

Writes one CSV per combination (index,re,im) and, with --png, a matplotlib
scatter of all panels. Higher alpha visibly concentrates the cloud around
its location.
"""

import argparse
from pathlib import Path

from hypdisc import ConfNatural, DiscPoint, RngStream, cn_sample_complex


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("build/scatter"))
    parser.add_argument("--n", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--png", action="store_true", help="also render a PNG panel grid")
    args = parser.parse_args()

    combos = [(alpha, a) for alpha in (2.0, 10.0) for a in (0.0 + 0.0j, 0.5 + 0.0j)]
    args.out.mkdir(parents=True, exist_ok=True)
    clouds = {}
    for i, (alpha, a) in enumerate(combos):
        dist = ConfNatural(alpha, DiscPoint.from_complex(a))
        z = cn_sample_complex(dist, RngStream(args.seed + i), args.n)
        clouds[(alpha, a)] = z
        path = args.out / f"scatter_alpha{alpha:g}_a{a.real:g}.csv"
        rows = ["index,re,im"] + [f"{k},{w.real:.17g},{w.imag:.17g}" for k, w in enumerate(z)]
        path.write_text("\n".join(rows) + "\n", encoding="utf-8")
        print(f"wrote {path}")

    if args.png:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        import numpy as np

        fig, axes = plt.subplots(2, 2, figsize=(8, 8))
        circle_t = np.linspace(0.0, 2.0 * np.pi, 256)
        for ax, (alpha, a) in zip(axes.ravel(), combos):
            z = clouds[(alpha, a)]
            ax.plot(np.cos(circle_t), np.sin(circle_t), lw=0.8, color="gray")
            ax.scatter(z.real, z.imag, s=8)
            ax.scatter([a.real], [a.imag], marker="x", color="red")
            ax.set_title(f"alpha={alpha:g}, a={a.real:g}")
            ax.set_aspect("equal")
            ax.set_xlim(-1.05, 1.05)
            ax.set_ylim(-1.05, 1.05)
        fig.tight_layout()
        png = args.out / "scatter.png"
        fig.savefig(png, dpi=150)
        print(f"wrote {png}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
