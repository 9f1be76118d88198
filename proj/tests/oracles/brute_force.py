"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Everything here is plain enumeration over subsets / labelings with networkx
only used for graph construction, graph6 encoding and the graph atlas.
Run: python3 tests/oracles/brute_force.py
"""
import itertools

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def boundary(g, s):
    out = set()
    for v in s:
        out |= set(g[v])
    return out - set(s)


def diff_sets(g, nodes=None):
    nodes = list(g.nodes) if nodes is None else list(nodes)
    best, sets = None, []
    for k in range(len(nodes) + 1):
        for s in itertools.combinations(nodes, k):
            d = len(boundary(g, s)) - len(s)
            if best is None or d > best:
                best, sets = d, [s]
            elif d == best:
                sets.append(s)
    return best, sets


def r_graph(g):
    n = g.number_of_nodes()
    r = nx.Graph()
    r.add_nodes_from(range(n + g.number_of_edges()))
    r.add_edges_from(g.edges)
    for i, (a, b) in enumerate(sorted(tuple(sorted(e)) for e in g.edges)):
        r.add_edge(n + i, a)
        r.add_edge(n + i, b)
    return r


def gamma(g):
    nodes = list(g.nodes)
    for k in range(len(nodes) + 1):
        for s in itertools.combinations(nodes, k):
            if set(s) | boundary(g, s) == set(nodes):
                return k


def tau(g):
    nodes = list(g.nodes)
    for k in range(len(nodes) + 1):
        for s in itertools.combinations(nodes, k):
            if all(a in s or b in s for a, b in g.edges):
                return k


def roman(g):
    nodes = list(g.nodes)
    best = None
    for lab in itertools.product((0, 1, 2), repeat=len(nodes)):
        ok = all(lab[v] != 0 or any(lab[w] == 2 for w in g[v]) for v in nodes)
        if ok and (best is None or sum(lab) < best):
            best = sum(lab)
    return best


def psi(g):
    nodes = list(g.nodes)
    return max(len(boundary(g, s)) for k in range(len(nodes) + 1)
               for s in itertools.combinations(nodes, k))


def alpha(g):
    return max(len(c) for c in nx.find_cliques(nx.complement(g)))


def mu(g):
    n = g.number_of_nodes()
    r = r_graph(g)
    best, sets = diff_sets(r, range(n))
    return best, max(len(s) for s in sets), sets


def kprime(r):
    g = nx.complete_bipartite_graph(r, 2 * r)
    for i in range(r):
        g.add_edge(r + i, r + i + r)
    return g


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    p7, c6, c5, p4 = nx.path_graph(7), nx.cycle_graph(6), nx.cycle_graph(5), nx.path_graph(4)
    print("diff(P7)", diff_sets(p7)[0], "sets", diff_sets(p7)[1])
    print("gamma(C6)", gamma(c6), "tau(C5)", tau(c5))
    print("roman(C5)", roman(c5), "roman(P7)", roman(p7))
    print("psi(P4)", psi(p4))
    print("mu(K3)", mu(nx.complete_graph(3))[:2], mu(nx.complete_graph(3))[2])
    print("mu(K4)", mu(nx.complete_graph(4))[:2])
    print("mu(K24)", mu(nx.complete_bipartite_graph(2, 4))[:2])
    print("mu(K'24)", mu(kprime(2))[:2], "alpha", alpha(kprime(2)))
    print("gamma(R(K'24))", gamma(r_graph(kprime(2))))
    print("diff R(P7)", diff_sets(r_graph(p7))[0])
    print("g6 K3", g6(nx.complete_graph(3)), "E2", g6(nx.empty_graph(2)),
          "P4", g6(p4), "C5", g6(c5), "K24", g6(nx.complete_bipartite_graph(2, 4)))
    counts = {}
    for g in graph_atlas_g():
        if g.number_of_nodes() >= 1 and nx.is_connected(g):
            counts[g.number_of_nodes()] = counts.get(g.number_of_nodes(), 0) + 1
    print("connected classes per order", counts)


if __name__ == "__main__":
    main()
