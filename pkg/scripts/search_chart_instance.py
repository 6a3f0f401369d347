#!/usr/bin/env python3
"""Search for a model whose sampled derivation chart matches the six-type target.

Sweeps random Gram matrices in dimensions 3 and 4, realizes strata of the
canonical family with dense ratio ladders, builds the chart, and tests all
six-node subsets for isomorphism with the target.  Run from the repository
root with PYTHONPATH=src.

Outcome of the recorded runs (seeds 0..7, 400 models, ~25 minutes): no hit.
Every chart is a zigzag path plus a universal sink, because the family's
pairwise comparisons cancel q and therefore depend on the single ratio
b(y1,-)/b(y2,-); the target needs an in-degree-3 node that is not a
universal sink, which neither shape provides.
"""

import itertools
import sys

from troprays.errors import TropraysError
from troprays.instances import CHART_TARGET_EDGES, CHART_TARGET_NODES
from troprays.quadspace import Vector
from troprays.rays import Ray
from troprays.sampling import Sampler
from troprays.strata import derivation_chart, example_family, sign_vector_at


def is_isomorphic(nodes_a, edges_a, nodes_b, edges_b):
    if len(nodes_a) != len(nodes_b) or len(edges_a) != len(edges_b):
        return False
    eb = set(edges_b)
    for perm in itertools.permutations(nodes_b):
        phi = dict(zip(nodes_a, perm))
        if all((phi[x], phi[y]) in eb for x, y in edges_a):
            return True
    return False


def main(seed: int, models: int) -> int:
    sampler = Sampler(seed, num_bound=5, den_bound=1)
    for trial in range(models):
        dim = sampler.rng.choice([3, 3, 4])
        pair = sampler.anisotropic_pair(dim, balanced=True)
        y1, y2 = Ray(Vector.unit(dim, 0)), Ray(Vector.unit(dim, 1))
        try:
            family = example_family(pair, y1, y2)
        except TropraysError:
            continue
        if len(family) != 5:
            continue
        sample = []
        seen = set()
        for _ in range(160):
            x = Ray(sampler.vector(dim, p_zero=0.35))
            try:
                sv = sign_vector_at(pair, family, x)
            except TropraysError:
                continue
            if sv not in seen:
                seen.add(sv)
                sample.append(x)
        if len(sample) < 6:
            continue
        chart = derivation_chart(pair, family, sample)
        for subset in itertools.combinations(chart.nodes, 6):
            chosen = set(subset)
            edges = [(a, b) for a, b in chart.edges
                     if a in chosen and b in chosen]
            if len(edges) != len(CHART_TARGET_EDGES):
                continue
            if is_isomorphic(subset, edges, CHART_TARGET_NODES,
                             CHART_TARGET_EDGES):
                print(f"HIT at trial {trial}:")
                print("  q_diag:", [str(v) for v in pair.q_diag])
                print("  b:", [[str(v) for v in row] for row in pair.b])
                return 0
        if trial % 25 == 0:
            print(f"trial {trial}: {len(seen)} strata, "
                  f"{len(chart.edges)} edges, no match")
    print("no matching instance found")
    return 1


if __name__ == "__main__":
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    models = int(sys.argv[2]) if len(sys.argv) > 2 else 50
    sys.exit(main(seed, models))
