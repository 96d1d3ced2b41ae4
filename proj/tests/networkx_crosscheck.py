"""Cross-checks enumeration and automorphism-group orders against the
networkx graph atlas (all graphs on up to 7 vertices)."""

import json
import subprocess
import sys
import tempfile
from collections import Counter
from pathlib import Path

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher


def aut_order(g):
    return sum(1 for _ in GraphMatcher(g, g).isomorphisms_iter())


def main(cli, max_n):
    atlas = nx.graph_atlas_g()
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for n in range(1, max_n + 1):
            prefix = Path(tmp) / f"n{n}"
            subprocess.run([cli, "batch", "--n", str(n), "--jobs", "0", "--out", str(prefix)],
                           check=True, stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
            records = [json.loads(line) for line in open(f"{prefix}.ndjson")]
            ours = [nx.from_graph6_bytes(r["graph6"].encode()) for r in records]
            theirs = [g for g in atlas if g.number_of_nodes() == n and nx.is_connected(g)]

            matched = [False] * len(theirs)
            for g, rec in zip(ours, records):
                hits = [i for i, h in enumerate(theirs) if nx.is_isomorphic(g, h)]
                if len(hits) != 1 or matched[hits[0]]:
                    print(f"FAIL n={n}: {rec['graph6']} matches {len(hits)} atlas graphs")
                    failures += 1
                    continue
                matched[hits[0]] = True
                if aut_order(g) != rec["aut_order"]:
                    print(f"FAIL n={n}: {rec['graph6']} |Aut| {rec['aut_order']} vs {aut_order(g)}")
                    failures += 1
            missing = matched.count(False)
            if missing:
                print(f"FAIL n={n}: {missing} atlas graphs not enumerated")
                failures += 1
            orders = Counter(r["aut_order"] for r in records)
            print(f"n={n}: {len(records)} graphs, atlas {len(theirs)}, orders {dict(sorted(orders.items(), reverse=True))}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], int(sys.argv[2]) if len(sys.argv) > 2 else 6))
