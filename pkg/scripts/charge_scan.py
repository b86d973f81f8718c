import argparse
import csv
import io

import numpy as np
import tqdm

from cl33.charges import ContourSpec, argument_integral, parse_q
from cl33.core.exceptions import DomainError


def scan(q, center, radii, samples):
    """Counts the enclosed charge of q for each contour radius"""
    rows = []
    for radius in tqdm.tqdm(radii, desc="radii"):
        try:
            report = argument_integral(q, ContourSpec(center, float(radius), samples))
        except DomainError:
            # the contour crosses a zero or a pole
            continue
        rows.append({"radius": float(radius), "P": report.P, "N": report.N,
                     "net": report.net, "residual": report.residual})
    return rows


def arg_parse():
    """Parse arguments"""
    parser = argparse.ArgumentParser(
        description="Sweeps circular contours of growing radius through the transverse-time plane "
                    "and writes the enclosed pole and zero counts of q(t) to CSV."
    )
    parser.add_argument("q", type=str, help='q(t) in factor form, e.g. "(t-1-2i)*(t+0.5i)/(t-3)"')
    parser.add_argument("--center", type=complex, default=0j, help="contour center, e.g. 0.5+1j")
    parser.add_argument("--r-max", type=float, default=4.0, help="largest radius")
    parser.add_argument("--steps", type=int, default=40, help="number of radii")
    parser.add_argument("--samples", type=int, default=4096, help="quadrature points per contour")
    parser.add_argument("--save", type=str, default="charges.csv", help="output CSV file")
    return parser


def main(args):
    q = parse_q(args.q)
    radii = np.linspace(args.r_max / args.steps, args.r_max, args.steps)
    rows = scan(q, args.center, radii, args.samples)
    fieldnames = ("radius", "P", "N", "net", "residual")
    with io.open(args.save, "w", newline="", encoding="utf-8") as csvfile:
        writer = csv.DictWriter(csvfile, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)


if __name__ == "__main__":
    parser = arg_parse()
    args = parser.parse_args()
    main(args)
