"""Clique/greedy bounds (and exact values where small) across instances."""

import json

from grasscolor.cli import RunConfig, run

SMALL = [(2, 3, 2), (2, 4, 2)]
LARGER = [(2, 5, 2), (3, 4, 2), (2, 6, 2), (4, 4, 2)]

if __name__ == "__main__":
    for q, n, m in SMALL + LARGER:
        text, _ = run(RunConfig("bounds", q=q, n=n, m=m, exact=(q, n, m) in SMALL))
        b = json.loads(text)["bounds"]
        tag = f"exact {b['exact']}" if "exact" in b else f"{b['lower']}..{b['upper']}"
        print(f"J_{q}({n},{m}): {tag}")
