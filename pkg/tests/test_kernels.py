"""Backend equivalence: every kernel's numba and numpy paths must agree."""

import numpy as np
import pytest

from cutlab import _kernels
from cutlab.constructors import construct, dicyclic, heisenberg, metacyclic

IMPLS = _kernels.implementations()


def test_envisaged_backends_present():
    assert "numpy" in IMPLS
    if _kernels.USE_NUMBA:
        assert "numba" in IMPLS


def _random_perms(rng, k, n):
    return np.stack([rng.permutation(n) for _ in range(k)]).astype(np.int32)


@pytest.mark.parametrize("name", sorted(IMPLS))
def test_orbit_labels_matches_bruteforce_components(name):
    orbit, _, _ = IMPLS[name]
    rng = np.random.default_rng(7)
    for trial in range(5):
        n = int(rng.integers(2, 60))
        perms = _random_perms(rng, int(rng.integers(1, 4)), n)
        labels = orbit(perms)
        # brute-force union-find for comparison
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for p in perms:
            for x in range(n):
                ra, rb = find(x), find(int(p[x]))
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        expected = [find(x) for x in range(n)]
        # normalize both to min-of-component
        comp = {}
        for x in range(n):
            comp.setdefault(expected[x], []).append(x)
        minlab = {root: min(xs) for root, xs in comp.items()}
        assert [minlab[expected[x]] for x in range(n)] == list(labels)


def test_orbit_labels_backends_agree():
    rng = np.random.default_rng(3)
    perms = _random_perms(rng, 3, 200)
    results = {name: impl[0](perms) for name, impl in IMPLS.items()}
    baseline = results["numpy"]
    for labels in results.values():
        assert np.array_equal(labels, baseline)


@pytest.mark.parametrize("name", sorted(IMPLS))
def test_first_bad_triple(name):
    _, triple, _ = IMPLS[name]
    n = 7
    good = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    assert triple(good.astype(np.int32)) is None
    bad = good.copy()
    bad[2, 3] = (bad[2, 3] + 1) % n
    found = triple(bad.astype(np.int32))
    assert found is not None
    i, j, k = found
    assert bad[bad[i, j], k] != bad[i, bad[j, k]]


@pytest.mark.parametrize(
    "spec, expect_cut",
    [
        (metacyclic(12, 2, 5), True),
        (metacyclic(9, 9, 4), False),
        (dicyclic(4), False),
        (heisenberg(3), True),
    ],
)
def test_cut_witness_scan_backends_agree(spec, expect_cut):
    G = construct(spec)
    table = G.dense_table()
    inv = np.argmax(table == 0, axis=1).astype(np.int32)
    outcomes = {}
    for name, (_, _, scan) in IMPLS.items():
        wx, wj = scan(table, inv)
        outcomes[name] = (list(wx), list(wj))
        assert (len(wx) == 0) == expect_cut
    baseline = outcomes["numpy"]
    for got in outcomes.values():
        assert got == baseline
