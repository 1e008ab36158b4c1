#!/usr/bin/env python
"""Coefficients of the three channels against rabi/|detuning| at the central pair.

Writes whitespace-separated columns (rabi/|D|, ordinary, blue, red in cm^-1)
that show the ordinary channel flattening out while both sidebands keep
growing linearly.
"""
import argparse
import math

import numpy as np

from dressedpdc import PumpConfig, SidebandComponent, central_pair, gain, load_scenario, superposition_from_angles


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scenario", default="paper_s3")
    parser.add_argument("--theta", type=float, default=math.pi / 8, help="superposition angle (rad)")
    parser.add_argument("--min-ratio", type=float, default=1e-3)
    parser.add_argument("--max-ratio", type=float, default=1e3)
    parser.add_argument("--count", type=int, default=61)
    parser.add_argument("--out", default="saturation_curves.dat")
    return parser.parse_args()


def main():
    args = parse_args()
    scenario = load_scenario(args.scenario)
    state = superposition_from_angles(args.theta)
    d = abs(scenario.lab.detuning)
    rows = []
    for ratio in np.geomspace(args.min_ratio, args.max_ratio, args.count):
        pump = PumpConfig.from_rabi(scenario.transition, scenario.lab.detuning, ratio * d)
        row = [ratio]
        for comp in SidebandComponent:
            pair = central_pair(comp, pump.omega_p, pump.rabi)
            row.append(gain(comp, scenario.transition, pump, state, pair, scenario.matrix_model).coefficient)
        rows.append(row)
    header = f"scenario {scenario.name}, theta = {args.theta:.6g} rad\nrabi/|D|  ordinary[cm^-1]  blue[cm^-1]  red[cm^-1]"
    np.savetxt(args.out, np.array(rows), header=header)
    last, first = rows[-1], rows[len(rows) // 2]
    print(f"wrote {args.out}")
    for n, name in enumerate(("ordinary", "blue", "red"), start=1):
        print(f"{name:>8}: x{last[n] / first[n]:.3g} from rabi = {first[0]:.3g}|D| to {last[0]:.3g}|D|")


if __name__ == "__main__":
    main()
