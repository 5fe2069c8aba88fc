"""Build nodal hypersurface instances on the three standard weighted
ambients and print their defect reports across several seeds.

Run from the repository root:  python3 scripts/defect_survey.py [seed]
"""

import sys

from delpezzo.wps import WeightedSpace, build_nodal_hypersurface, defect

CASES = [
    ("cubic threefold", WeightedSpace((1, 1, 1, 1, 1)), 3,
     [(0, 0, 0, 0, 1), (0, 0, 0, 1, 0), (0, 0, 1, 0, 0), (0, 1, 0, 0, 0)]),
    ("quartic double cover", WeightedSpace((1, 1, 1, 1, 2)), 4,
     [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0)]),
    ("sextic", WeightedSpace((1, 1, 1, 2, 3)), 6,
     [(1, 0, 0, 0, 0)]),
]


def main(base_seed: int = 0):
    for label, space, degree, nodes in CASES:
        for mu in range(1, len(nodes) + 1):
            for seed in (base_seed, base_seed + 1):
                hyp = build_nodal_hypersurface(space, degree, nodes[:mu],
                                               seed=seed)
                rep = defect(hyp)
                verdict = "delta < mu" if rep.delta < rep.mu else "MAXIMAL"
                print(f"{label:22s} mu={rep.mu} seed={seed}: h0(L)={rep.h0_L:3d} "
                      f"rank={rep.eval_rank} delta={rep.delta}  [{verdict}]")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 0)
