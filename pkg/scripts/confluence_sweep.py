"""Sample random terms, normalize every one-step reduct, and tabulate the
non-joinable peaks by the pair of rules that open them.

    python scripts/confluence_sweep.py --samples 10000 --weights generic
    python scripts/confluence_sweep.py --weights generic --drop subL subR
"""

import argparse
import collections
import json
import random
import time

from pathrw.checks import check_confluence
from pathrw.engine import normal_form, one_step_reducts
from pathrw.env import sample_env
from pathrw.generate import GENERIC_WEIGHTS, GROUPOID_WEIGHTS, random_term
from pathrw.syntax import parse_path, print_path

WEIGHTS = {"generic": GENERIC_WEIGHTS, "groupoid": GROUPOID_WEIGHTS}


def peak_rules(p):
    """Rule names of two reducts that end in different normal forms."""
    by_nf = collections.defaultdict(list)
    for pos, name, q in one_step_reducts(p):
        by_nf[normal_form(q)].append(name)
    groups = sorted(sorted(v) for v in by_nf.values())
    return tuple(sorted(g[0] for g in groups[:2]))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=10000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-size", type=int, default=10)
    ap.add_argument("--weights", choices=sorted(WEIGHTS), default="generic")
    ap.add_argument("--drop", nargs="*", default=[], help="constructors to switch off")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    weights = {k: v for k, v in WEIGHTS[args.weights].items() if k not in args.drop}
    env = sample_env()
    failures = []
    t = time.perf_counter()
    rep = check_confluence(args.samples, args.seed, args.max_size, weights=weights,
                           env=env, failures=failures)
    dt = time.perf_counter() - t
    pairs = collections.Counter()
    for f in failures:
        if f.kind == "peak":
            pairs[peak_rules(parse_path(f.term, env))] += 1
    if args.json:
        print(json.dumps({"samples": args.samples, "weights": weights, "seconds": dt,
                          "failures": len(failures),
                          "pairs": {"/".join(k): v for k, v in pairs.items()}}, indent=2))
        return
    print(rep.to_text())
    print(f"\n{len(failures)} failing terms in {dt:.1f}s; peaks by rule pair:")
    for k, v in pairs.most_common():
        print(f"  {v:4d}  {' / '.join(k)}")


if __name__ == "__main__":
    main()
