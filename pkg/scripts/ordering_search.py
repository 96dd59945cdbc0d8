#!/usr/bin/env python3
"""Enumerate line orderings of one fixture, dedupe the conjugation-free
candidates they induce, and try to certify each distinct candidate.

The ordering only changes the candidate through the cyclic order of the
entries at each multiple point, so the dedup usually collapses the
factorial search to a handful of genuinely different presentations."""

import argparse
import itertools
import time
from importlib import resources

from arrgroup import (
    Budget,
    candidate_cf,
    compute_lattice,
    genericize,
    lefschetz_pairs,
    parse_arrangement,
    presentation,
    prove_equivalent,
    relabel_presentation,
)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--name", default="triangle", help="fixture name")
    ap.add_argument("--max-steps", type=int, default=20000)
    ap.add_argument("--budget-nodes", type=int, default=5000,
                    help="search nodes per candidate")
    args = ap.parse_args(argv)

    path = resources.files("arrgroup").joinpath(f"fixtures/{args.name}.lines")
    generic, _ = genericize(parse_arrangement(path.read_text()))
    lat = compute_lattice(generic)
    pres = presentation(lefschetz_pairs(generic))
    budget = Budget(max_steps=args.max_steps, bfs_nodes=args.budget_nodes)

    outcomes = {}
    t0 = time.perf_counter()
    for perm in itertools.permutations(range(1, lat.n + 1)):
        cand = relabel_presentation(candidate_cf(lat, perm), perm)
        key = tuple(rel.words for rel in cand.relations)
        if key in outcomes:
            outcomes[key][1] += 1
            continue
        result = prove_equivalent(pres, cand, budget)
        outcomes[key] = [result, 1]
    secs = time.perf_counter() - t0

    certified = sum(1 for r, _ in outcomes.values() if r.status == "certified")
    print(f"{args.name}: {lat.n} lines, "
          f"{sum(c for _, c in outcomes.values())} orderings, "
          f"{len(outcomes)} distinct candidates, "
          f"{certified} certified ({secs:.2f}s)")
    for i, (key, (result, count)) in enumerate(sorted(outcomes.items()), 1):
        if result.status == "certified":
            note = f"certified in {result.certificate.nsteps} steps"
        else:
            note = f"unknown ({result.reason})"
        print(f"  candidate {i}: {count} orderings, {note}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
