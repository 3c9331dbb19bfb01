#!/usr/bin/env python3
"""Census of mutation classes around the start fixtures.

Walks the mutation class modulo isomorphism outward from each cluster start
fixture, printing how many distinct quivers appear at each depth.  The
classes here are finite, so with enough depth the counts saturate.
"""

import argparse
from collections import deque

from wpline import canonical_key, mutate
from wpline.fixtures import fixture


def census(name: str, max_depth: int) -> None:
    start = fixture(name)
    seen = {canonical_key(start)}
    frontier = deque([(start, 0)])
    per_depth = {0: 1}
    while frontier:
        q, d = frontier.popleft()
        if d >= max_depth:
            continue
        for v in sorted(q.ids):
            nxt = mutate(q, v)
            key = canonical_key(nxt)
            if key not in seen:
                seen.add(key)
                per_depth[d + 1] = per_depth.get(d + 1, 0) + 1
                frontier.append((nxt, d + 1))
    print(f"{name}: {len(seen)} distinct quivers within depth {max_depth}")
    for d in sorted(per_depth):
        print(f"  depth {d}: +{per_depth[d]}")


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--depth", type=int, default=4)
    parser.add_argument(
        "--fixtures",
        nargs="*",
        default=["tbar_cluster_333", "cuboid_cluster_244", "cuboid_cluster_236"],
    )
    args = parser.parse_args()
    for name in args.fixtures:
        census(name, args.depth)


if __name__ == "__main__":
    main()
