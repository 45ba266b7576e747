"""Small control graphs built independently of the package's constructions."""
import itertools

from qdrg.graphs import load_graph


def kneser_like(n, adjacent):
    verts = list(itertools.combinations(range(n), 2))
    edges = [(i, j) for i, j in itertools.combinations(range(len(verts)), 2) if adjacent(verts[i], verts[j])]
    return load_graph(len(verts), edges)


def petersen():
    return kneser_like(5, lambda u, v: not set(u) & set(v))


def triangular(n):
    return kneser_like(n, lambda u, v: bool(set(u) & set(v)))


def six_cycle_with_chord():
    return load_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])


def dense_adjacency(g):
    return [[int(v) for v in row] for row in g.adjacency]
