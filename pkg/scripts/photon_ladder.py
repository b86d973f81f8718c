import argparse

from tabulate import tabulate

from cl33.waves.packet import PacketSpec, eigenfrequency_ladder, \
    packet_energy_quantum, resonant_packet


def ladder_rows(tau0, n_max):
    """Builds one row per rung: frequency, energy quantum and edge residuals"""
    rows = []
    for N, f_N in enumerate(eigenfrequency_ladder(tau0, n_max)):
        spec = PacketSpec(1 / (2 * tau0), N, tau0)
        _, checks = resonant_packet(spec)
        by_name = {c.name: c for c in checks}
        edge = max(by_name['edge_B.start'].residual,
                   by_name['edge_B.end'].residual)
        rows.append([N, f_N, packet_energy_quantum(spec), edge,
                     'pass' if all(c.passed for c in checks) else 'fail'])
    return rows


def arg_parse():
    """Parse arguments"""
    parser = argparse.ArgumentParser(
        description="Tabulates the resonant packet ladder f_N = (N + 1/2)/tau0 "
                    "and checks every rung's edge conditions."
    )
    parser.add_argument("--tau0", type=float, default=1.0, help="packet length in u")
    parser.add_argument("--n-max", type=int, default=6, help="highest rung to tabulate")
    parser.add_argument("--tablefmt", type=str, default="simple", help="any tabulate format")
    return parser


def main(args):
    rows = ladder_rows(args.tau0, args.n_max)
    print(tabulate(rows, headers=["N", "f_N", "quantum", "edge |B|", "status"],
                   tablefmt=args.tablefmt))


if __name__ == "__main__":
    parser = arg_parse()
    args = parser.parse_args()
    main(args)
