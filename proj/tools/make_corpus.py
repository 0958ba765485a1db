#!/usr/bin/env python3
"""Regenerate the frozen cubic-graph corpus under data/corpus/.

Requires nauty's ``geng`` and ``multig`` on PATH (or NAUTY_BIN pointing at the
directory holding them). The output files are checked into the repository; this
script only exists so the catalog can be reproduced.

Files written:
  cubic_nNN.txt           connected cubic multigraphs on NN vertices, loops allowed (NN <= 10)
  cubic_loopless_n12.txt  connected loopless cubic multigraphs on 12 vertices
  simple_nNN.g6           connected simple cubic graphs, graph6 (4 <= NN <= 12)

Multigraph files hold one block per graph: a header line "n m" followed by m
lines "u v" (a loop is "v v"; parallel edges repeat), blocks separated by a
blank line.
"""

import os
import pathlib
import subprocess
import sys

EXPECTED_LOOPS = {2: 2, 4: 5, 6: 17, 8: 71, 10: 388}
EXPECTED_LOOPLESS_12 = 509
EXPECTED_SIMPLE = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def tool(name):
    base = os.environ.get("NAUTY_BIN")
    return str(pathlib.Path(base) / name) if base else name


def run(cmd, stdin=None):
    return subprocess.run(cmd, input=stdin, capture_output=True, check=True).stdout


def multigraphs(n, flag):
    simple = run([tool("geng"), "-cq", "-D3", str(n)])
    text = run([tool("multig"), "-q", "-T", flag], stdin=simple).decode()
    graphs = []
    for line in text.splitlines():
        fields = [int(x) for x in line.split()]
        nv, ne, rest = fields[0], fields[1], fields[2:]
        edges = []
        for i in range(ne):
            u, v, mult = rest[3 * i: 3 * i + 3]
            edges.extend([(u, v)] * mult)
        graphs.append((nv, edges))
    return graphs


def write_blocks(path, graphs):
    with open(path, "w") as out:
        for idx, (n, edges) in enumerate(graphs):
            if idx:
                out.write("\n")
            out.write(f"{n} {len(edges)}\n")
            for u, v in edges:
                out.write(f"{u} {v}\n")


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "data" / "corpus"
    root.mkdir(parents=True, exist_ok=True)
    for n, expected in EXPECTED_LOOPS.items():
        graphs = multigraphs(n, "-l3")
        if len(graphs) != expected:
            sys.exit(f"n={n}: got {len(graphs)} multigraphs, expected {expected}")
        write_blocks(root / f"cubic_n{n:02d}.txt", graphs)
    graphs = multigraphs(12, "-r3")
    if len(graphs) != EXPECTED_LOOPLESS_12:
        sys.exit(f"n=12: got {len(graphs)} loopless multigraphs")
    write_blocks(root / "cubic_loopless_n12.txt", graphs)
    for n, expected in EXPECTED_SIMPLE.items():
        text = run([tool("geng"), "-cq", "-d3", "-D3", str(n)])
        if len(text.splitlines()) != expected:
            sys.exit(f"n={n}: simple count mismatch")
        (root / f"simple_n{n:02d}.g6").write_bytes(text)


if __name__ == "__main__":
    main()
