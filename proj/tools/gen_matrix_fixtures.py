#!/usr/bin/env python3
"""Regenerate tests/data/matrices/*.json (seeded, so the output is stable)."""

import json
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "matrices"


def entries(rng, size, density, value):
    out = []
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < density:
                out.append([i, j, value(rng)])
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20240611)
    sizes = [1, 2, 3, 4, 5, 7, 8, 9, 13, 17]
    for k, size in enumerate(sizes):
        density = 0.2 + 0.6 * rng.random()
        b = {"semiring": "bool", "size": size,
             "entries": entries(rng, size, density, lambda r: r.random() < 0.9)}
        m = {"semiring": "minplus", "size": size,
             "entries": entries(rng, size, density,
                                lambda r: "inf" if r.random() < 0.1 else r.randrange(0, 50))}
        for name, doc in (("bool", b), ("minplus", m)):
            path = OUT / f"{name}_{k:02d}.json"
            path.write_text(json.dumps(doc) + "\n")


if __name__ == "__main__":
    main()
