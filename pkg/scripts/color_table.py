"""Colors used by each method on the desk-scale Grassmann instances.

    python3 scripts/color_table.py [--out table.json]
"""

import argparse
import json
import time

from grasscolor.colorings import color_graph, verify_coloring
from grasscolor.graphs import build_graph
from grasscolor.projlinalg import gaussian_binomial

INSTANCES = [(2, 4, 2), (2, 5, 2), (2, 6, 2), (3, 4, 2), (4, 4, 2), (2, 5, 3), (3, 4, 3)]


def row(q, n, m):
    g = build_graph("grassmann", (q, n, m))
    out = {"q": q, "n": n, "m": m, "vertices": len(g),
           "lower": gaussian_binomial(n - m + 1, 1, q), "upper": gaussian_binomial(n, 1, q)}
    methods = ["moore"] + (["hawtin"] if m == 2 and q % 2 == 0 and n % 2 == 0 else [])
    for method in methods:
        t0 = time.perf_counter()
        r = verify_coloring(color_graph(method, g))
        out[method] = {"valid": r.valid, "colors": r.colors_used,
                       "seconds": round(time.perf_counter() - t0, 3)}
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out")
    args = ap.parse_args()
    rows = [row(*inst) for inst in INSTANCES]
    for r in rows:
        extra = f"  hawtin={r['hawtin']['colors']}" if "hawtin" in r else ""
        print(f"J_{r['q']}({r['n']},{r['m']}): {r['vertices']:5d} vertices  "
              f"bounds {r['lower']}..{r['upper']}  moore={r['moore']['colors']}{extra}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
