"""Count labelled digraphs per class and how many of each are chordal, n = 1..max_n.

    python3 scripts/class_census.py --max-n 4
"""
import argparse
from collections import Counter

from dichordal.chordality import is_chordal
from dichordal.classes import ClassLabel, classify
from dichordal.generators import count_digraphs, enumerate_digraphs


def census(n):
    members, chordal = Counter(), Counter()
    for d in enumerate_digraphs(n):
        c = is_chordal(d)
        members["all"] += 1
        chordal["all"] += c
        for label in classify(d):
            members[label.value] += 1
            chordal[label.value] += c
    return members, chordal


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()

    names = ["all"] + [lab.value for lab in ClassLabel]
    print("n  " + "  ".join(f"{nm:>22}" for nm in names))
    for n in range(1, args.max_n + 1):
        members, chordal = census(n)
        assert members["all"] == count_digraphs(n)
        cells = [f"{chordal[nm]:>10}/{members[nm]:<11}" for nm in names]
        print(f"{n}  " + "  ".join(cells))


if __name__ == "__main__":
    main()
