"""Clique and greedy bounds on the image of the line graph inside the binary Kneser graph.

    python3 scripts/induced_experiment.py --q 4 --n 4
"""

import argparse

from grasscolor.cli import RunConfig, run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=4)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--node-budget", type=int, default=200_000)
    args = ap.parse_args()
    text, code = run(RunConfig("induced", q=args.q, n=args.n, node_budget=args.node_budget))
    print(text, end="")
    raise SystemExit(code)


if __name__ == "__main__":
    main()
