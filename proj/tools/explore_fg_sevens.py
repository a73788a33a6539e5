"""Which f/g constructed binary words fail to avoid abelian 7-powers cyclically?

Exploratory: the construction is only guaranteed for exponent 8. This lists
lengths where some output contains an abelian 7-power of period < n, together
with the period of the first witness.

    PYTHONPATH=build/python python3 tools/explore_fg_sevens.py --max-length 300
"""

import argparse

import abelcyc


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-length", type=int, default=300)
    args = parser.parse_args()

    hits = 0
    for n in range(1, args.max_length + 1):
        for diamond in ((0, 1) if n % 2 else (0,)):
            w = abelcyc.build_binary_avoider(n, diamond)
            report = abelcyc.check(w, "7")
            if not report["verdict"]:
                hits += 1
                wit = report["witness"]
                print(f"n={n} diamond={diamond} period={wit['period']} start={wit['start']}")
    print(f"{hits} constructed words contain abelian 7-powers cyclically")


if __name__ == "__main__":
    main()
