"""How close each class comes to its bounds, grouped by box count.

For every basic class the script records the slack between the cc-type and
the lower bound (p_n, f_n) for its delta value, and between the cc-type and
the upper bound (p_N, f_N) for its size N. Classes with zero slack are listed.
"""
import argparse
from collections import defaultdict

from skewposet.diagrams import delta_value
from skewposet.lrrule import cc_type, decompose, one_box_pairs
from skewposet.sequences import f_count, g_count, p_count
from skewposet.verifier import enumerate_basic


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-boxes", type=int, default=7)
    ap.add_argument("--show-tight", action="store_true")
    args = ap.parse_args()

    rows = defaultdict(lambda: {"classes": 0, "lower_tight": [], "upper_tight": []})
    for c in enumerate_basic(args.max_boxes):
        size, n = c.size(), delta_value(c)
        ch = decompose(c.arrangement())
        comps, consts = cc_type(ch)
        row = rows[size]
        row["classes"] += 1
        if (comps, consts) == (p_count(n), f_count(n)):
            row["lower_tight"].append(str(c))
        if (comps, consts, one_box_pairs(ch)) == (p_count(size), f_count(size), g_count(size)):
            row["upper_tight"].append(str(c))

    print(f"{'N':>2} {'classes':>8} {'lower tight':>12} {'upper tight':>12}")
    for size, row in sorted(rows.items()):
        print(f"{size:>2} {row['classes']:>8} {len(row['lower_tight']):>12} {len(row['upper_tight']):>12}")
        if args.show_tight:
            for s in row["upper_tight"]:
                print(f"     upper: {s}")


if __name__ == "__main__":
    main()
