"""Order-sandwiched curves whose C^1 norms refuse to shrink.

Prints the table behind the demo-normality subcommand: x_n(t) = t^n/n sits
between 0 and y_n(t) = 1/n pointwise, yet its C^1 norm tends to 1 while the
dominating norm vanishes.  The growing ratio column is the point: no single
constant can convert order domination into norm domination here.
"""

import argparse

from conecert.normality import normality_table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--grid-points", type=int, default=1001)
    args = parser.parse_args()
    rows = normality_table(n_max=args.n_max, grid_points=args.grid_points)
    print(f"{'n':>3} {'|x_n|_C1':>10} {'|y_n|_C1':>10} {'ratio':>8} order")
    for r in rows:
        ratio = r["c1_norm_x"] / r["c1_norm_y"]
        print(f"{r['n']:>3} {r['c1_norm_x']:>10.6f} {r['c1_norm_y']:>10.6f} "
              f"{ratio:>8.2f} {'ok' if r['order_ok'] else 'VIOLATED'}")


if __name__ == "__main__":
    main()
