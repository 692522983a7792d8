#!/usr/bin/env python3
"""Write b-files for A001055 (factorizations of n) and A034836 (n = x*y*z,
x <= y <= z) using plain enumeration, independent of the C++ library.

    python3 tools/make_reference.py tests/data 1000
"""
import sys
from functools import lru_cache
from pathlib import Path


@lru_cache(maxsize=None)
def factorizations(n, largest):
    """Multisets of factors >= 2 with product n, none exceeding `largest`."""
    if n == 1:
        return 1
    return sum(factorizations(n // d, d)
               for d in range(2, min(n, largest) + 1) if n % d == 0)


def triples(n):
    count = 0
    x = 1
    while x * x * x <= n:
        if n % x == 0:
            r = n // x
            y = x
            while y * y <= r:
                if r % y == 0:
                    count += 1
                y += 1
        x += 1
    return count


def write(path, name, values):
    with open(path, "w", newline="\n") as out:
        out.write(f"# {name}, generated by tools/make_reference.py\n")
        for i, v in enumerate(values, start=1):
            out.write(f"{i} {v}\n")


def main():
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    n = int(sys.argv[2]) if len(sys.argv) > 2 else 1000
    write(outdir / "b001055.txt", "A001055",
          [factorizations(m, m) for m in range(1, n + 1)])
    write(outdir / "b034836.txt", "A034836", [triples(m) for m in range(1, n + 1)])


if __name__ == "__main__":
    main()
