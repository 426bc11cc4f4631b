import itertools

import pytest

from levicover import Graph, gen_levi


@pytest.fixture(scope="session")
def fano():
    return gen_levi(2)


@pytest.fixture(scope="session")
def plane3():
    return gen_levi(3)


def brute_independent_sets(g: Graph, k: int) -> list[int]:
    """Oracle: all independent sets of size 1..k by subset scan."""
    out = []
    for size in range(1, k + 1):
        for combo in itertools.combinations(range(g.n), size):
            mask = 0
            ok = True
            for v in combo:
                if g.adj[v] & mask:
                    ok = False
                    break
                mask |= 1 << v
            if ok:
                out.append(mask)
    return out


def brute_has_c4(g: Graph) -> bool:
    """Oracle: scan vertex 4-tuples for a cycle u-x-v-y-u."""
    for u, x, v, y in itertools.permutations(range(g.n), 4):
        if ((g.adj[u] >> x) & 1 and (g.adj[x] >> v) & 1
                and (g.adj[v] >> y) & 1 and (g.adj[y] >> u) & 1):
            return True
    return False


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))


def edgeless_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [], side_p_size=a)
