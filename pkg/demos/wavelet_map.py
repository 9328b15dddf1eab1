"""Wavelet coefficient map of a multifractal cascade.

The scalogram of a binomial cascade shows the branching, self-similar
arrangement of large coefficients across scales that a monofractal
series lacks. The same map drawn for white noise is structureless; run
with --white to see the contrast.

    python3 demos/wavelet_map.py [--levels 12] [--white]
"""

import argparse
from pathlib import Path

import numpy as np

import textfract as tf
from textfract import svgplot


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--levels", type=int, default=12)
    ap.add_argument("--white", action="store_true",
                    help="use white noise instead of a cascade")
    ap.add_argument("--out", default="demo_out")
    args = ap.parse_args()

    if args.white:
        series = tf.generate_white_noise(2**args.levels, 0)
        label = "white"
    else:
        series = tf.generate_binomial_cascade(args.p, args.levels)
        label = f"cascade_p{args.p}"

    wm = tf.wavelet_map(series)
    interior = np.where(wm.boundary, 0.0, wm.coefficients)
    out = Path(args.out)
    out.mkdir(exist_ok=True)
    path = out / f"wavelet_{label}.svg"
    path.write_text(svgplot.heatmap(interior, title=f"|T(s,k)|, {label}"),
                    encoding="utf-8")
    print(f"{len(wm.scales)} scales x {len(wm.positions)} positions; "
          f"wrote {path}")


if __name__ == "__main__":
    main()
