#!/usr/bin/env python3
"""Sample random rational 3-forms and tally their orbit classes.

Generic 3-forms fill an open dense set, so the not-generic count should be a
small fraction that shrinks as the coefficient range grows; among generic
samples both real orbits appear.  Everything is exact, so the tallies are
reproducible for a fixed seed.

Usage: classify_random_forms.py [--samples N] [--span K] [--seed S]
"""

import argparse
import itertools
import random
from collections import Counter
from fractions import Fraction

from g2models import forms as fo


def random_form(rng: random.Random, span: int) -> fo.KForm:
    coeffs = {}
    for idx in itertools.combinations(range(1, 8), 3):
        c = rng.randint(-span, span)
        if c:
            coeffs[idx] = Fraction(c)
    return fo.KForm(3, coeffs)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--span", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    for _ in range(args.samples):
        tag = fo.classify_orbit(random_form(rng, args.span))
        tally[tag.value] += 1
    total = sum(tally.values())
    print(f"samples={total} span={args.span} seed={args.seed}")
    for key in ("split", "compact", "not-generic"):
        n = tally.get(key, 0)
        print(f"  {key:12} {n:6d}  ({100.0 * n / total:5.1f} %)")


if __name__ == "__main__":
    main()
