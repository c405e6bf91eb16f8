"""Parses DOT files with pydot and checks node and edge counts."""
import sys

import pydot


def main(argv):
    for spec in argv[1:]:
        path, nodes, edges = spec.split(":")
        graphs = pydot.graph_from_dot_file(path, encoding="utf-8")
        if not graphs or len(graphs) != 1:
            print(f"{path}: not a single DOT graph")
            return 1
        g = graphs[0]
        got_nodes = len([n for n in g.get_nodes() if n.get_name() not in ("node", "edge", "graph")])
        got_edges = len(g.get_edges())
        if (got_nodes, got_edges) != (int(nodes), int(edges)):
            print(f"{path}: {got_nodes} nodes, {got_edges} edges; expected {nodes}, {edges}")
            return 1
        print(f"{path}: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
