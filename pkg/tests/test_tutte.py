import random
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import pytest

from corpus import CORPUS, ORCHARDS, K2, K3, K4, L1, D2, N3
from picspace.errors import GuardExceeded
from picspace.memo import SharedCache
from picspace.multigraph import Multigraph
from picspace.polyring import Poly
from picspace.tutte import TUTTE_VARS, tutte, tutte_by_subsets

x, y = Poly.gens(TUTTE_VARS)


def count_spanning_forests(g):
    """Maximal spanning forests, by brute force with a private union-find."""
    def acyclic(F):
        parent = {v: v for v in g.vertices}

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for e in F:
            a, b = map(find, g.edges[e])
            if a == b:
                return False
            parent[a] = b
        return True

    for k in range(g.n_edges, -1, -1):
        found = sum(acyclic(F) for F in combinations(g.edge_ids, k))
        if found:
            assert k == g.n_vertices - g.num_components()
            return found


def test_small_values():
    assert tutte(K2) == x
    assert tutte(L1) == y
    assert tutte(K3) == x**2 + x + y
    assert tutte(D2) == x + y
    assert tutte(N3) == 1


def test_subset_oracle_small_values():
    assert tutte_by_subsets(N3) == 1
    assert tutte_by_subsets(D2) == x + y
    assert tutte_by_subsets(K3) == x**2 + x + y
    assert tutte_by_subsets(K4).evaluate(x=1, y=1) == 16


@pytest.mark.parametrize("name", sorted(ORCHARDS))
def test_orchard_tutte_is_monomial(name):
    g = ORCHARDS[name]
    loops = len(g.loops())
    assert tutte(g) == x ** (g.n_edges - loops) * y**loops


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_recurrence_matches_subsets(name):
    g = CORPUS[name]
    assert tutte(g) == tutte_by_subsets(g)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_specializations(name):
    T = tutte(CORPUS[name])
    assert T.evaluate(x=2, y=2) == 2 ** CORPUS[name].n_edges
    assert T.evaluate(x=1, y=1) == count_spanning_forests(CORPUS[name])
    assert all(c > 0 for c in T.terms.values())


@pytest.mark.parametrize("name", ["K4", "theta", "K3_loop", "K4_plus", "K23"])
def test_pivot_independence(name):
    g = CORPUS[name]
    expected = tutte(g)
    rng = random.Random(name)
    for _ in range(20):
        assert tutte(g, pivot=lambda h: rng.choice(h.edge_ids)) == expected


def test_multiplicative_over_disjoint_union():
    for a, b in [("K3", "D2"), ("K4", "L1"), ("theta", "acetylene")]:
        g = CORPUS[a].disjoint_union(CORPUS[b])
        assert tutte(g) == tutte(CORPUS[a]) * tutte(CORPUS[b])


def test_subset_guard():
    big = Multigraph.banana(25)
    with pytest.raises(GuardExceeded):
        tutte_by_subsets(big)


def test_shared_cache_across_threads():
    cache = SharedCache()
    graphs = [CORPUS[n] for n in ("K4", "theta", "K23", "K4_plus")] * 4
    with ThreadPoolExecutor(4) as pool:
        results = list(pool.map(lambda g: tutte(g, cache=cache), graphs))
    assert results == [tutte(g) for g in graphs]
    assert len(cache) > 0
