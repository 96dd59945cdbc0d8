#!/usr/bin/env python3
"""Survey the bundled arrangement fixtures in one table: lattice shape,
cycle rank of the multiple-point graph, certifier verdict and a hom-count."""

import argparse
import time
from importlib import resources

from arrgroup import (
    builtin_group,
    cf_verdict,
    compute_lattice,
    genericize,
    hom_count,
    lefschetz_pairs,
    multiple_point_graph,
    parse_arrangement,
    presentation,
)

NAMES = ("pencil", "nearpencil", "triangle", "triangle_plus_line",
         "cycle5", "ceva")


def load(name):
    path = resources.files("arrgroup").joinpath(f"fixtures/{name}.lines")
    return parse_arrangement(path.read_text())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--names", nargs="*", default=NAMES,
                    help="fixture names to survey")
    ap.add_argument("--group", default="S3",
                    help="finite group for the hom-count column")
    args = ap.parse_args(argv)

    table = builtin_group(args.group)
    header = (f"{'fixture':<20} {'n':>2} {'pts':>4} {'mult':>4} {'betti':>5} "
              f"{'verdict':<10} {'steps':>5} {'hom-' + args.group:>8} "
              f"{'secs':>6}")
    print(header)
    print("-" * len(header))
    for name in args.names:
        generic, _ = genericize(load(name))
        lat = compute_lattice(generic)
        graph = multiple_point_graph(lat)
        pres = presentation(lefschetz_pairs(generic))
        t0 = time.perf_counter()
        verdict = cf_verdict(lat, pres)
        secs = time.perf_counter() - t0
        steps = verdict.certificate.nsteps if verdict.certificate else 0
        homs = hom_count(pres, table).count
        print(f"{name:<20} {lat.n:>2} {len(lat.points):>4} {lat.p:>4} "
              f"{graph.betti:>5} {verdict.status:<10} {steps:>5} "
              f"{homs:>8} {secs:>6.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
