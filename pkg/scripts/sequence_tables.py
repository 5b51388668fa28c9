"""Print the g/p/f/barp table and the bijection rows for small weights."""
import argparse

from skewposet.sequences import bar_partitions, bijection_forward, format_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=13)
    ap.add_argument("--pairs-up-to", type=int, default=3)
    args = ap.parse_args()

    print(format_table(args.max, ("g", "p", "f", "barp")))
    for n in range(args.pairs_up_to + 1):
        print(f"weight {n}:")
        for b in bar_partitions(n):
            pair = bijection_forward(b)
            print(f"  {str(b):<14} -> ({pair.nu1}) / ({pair.nu2})")


if __name__ == "__main__":
    main()
