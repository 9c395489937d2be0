"""Circle and naturals at a glance: winding numbers against the exponent-sum
oracle, the nat encode/decode table, and the axiom-K sampler on both spaces.

    python scripts/spaces_report.py --samples 200 --seed 0
"""

import argparse

from pathrw.engine import normalize
from pathrw.env import circle_env
from pathrw.generate import CIRCLE_WEIGHTS, random_term
from pathrw.spaces import (
    Unit, axiom_k_sample, exponent_sum, loop_power, nat_decode, nat_dec_eq, nat_encode,
    recur_depth, winding,
)
from pathrw.syntax import print_path, print_point


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print("circle: random paths, winding vs exponent sum")
    env = circle_env()
    for s in range(args.seed, args.seed + 8):
        p = random_term(env, 4, CIRCLE_WEIGHTS, seed=s)
        tr = normalize(p)
        print(f"  {winding(p):>3} {exponent_sum(p):>3} {len(tr.steps):>3} steps  {print_path(p)}")
    print("  loop_power(-3..3) normal forms:")
    for n in range(-3, 4):
        print(f"    {n:>2}  {print_path(normalize(loop_power(n)).result)}")

    print("\nnaturals: decode / encode")
    for m in range(4):
        p = nat_decode(m, m, Unit())
        print(f"  {m}: {print_path(p)} -> {print_path(normalize(p).result)}, "
              f"encode depth {recur_depth(nat_encode(m, m, p))}")
    print(f"  dec_eq(2,3) = {nat_dec_eq(2, 3).value}")

    print("\naxiom K")
    for space in ("nat", "circle"):
        rep = axiom_k_sample(space, samples=args.samples, seed=args.seed)
        w = print_path(rep.witness) if rep.witness is not None else "-"
        print(f"  {space:<6} at {print_point(rep.point)}: {rep.collapsed}/{rep.samples} collapse to rho; "
              f"{len(rep.witnesses)} distinct non-rho normal forms, first {w}")


if __name__ == "__main__":
    main()
