"""Shared fixtures and the independent naive oracles used to freeze values.

The naive helpers work on a raw Python list-of-lists multiplication table
and use nothing from the package beyond ``mul`` to extract that table, so
they stay independent of the code paths they check.
"""

import math

import pytest

from cutlab.corpus import builtin_corpus, run_corpus


def table_of(G):
    return [[G.mul(i, j) for j in range(G.order)] for i in range(G.order)]


def naive_inv(t):
    return [t[x].index(0) for x in range(len(t))]


def naive_classes(t):
    """Conjugacy classes by conjugating with every element."""
    n = len(t)
    inv = naive_inv(t)
    classes, seen = [], set()
    for x in range(n):
        if x in seen:
            continue
        cls = frozenset(t[t[g][x]][inv[g]] for g in range(n))
        seen |= cls
        classes.append(cls)
    return classes


def naive_order(t, x):
    k, y = 1, x
    while y != 0:
        y = t[y][x]
        k += 1
    return k


def naive_center(t):
    n = len(t)
    return [x for x in range(n) if all(t[x][g] == t[g][x] for g in range(n))]


def naive_cut(t):
    """Direct evaluation of the coprime-power conjugacy criterion."""
    n = len(t)
    inv = naive_inv(t)
    classes = naive_classes(t)
    cls_of = {}
    for c in classes:
        for x in c:
            cls_of[x] = c
    for x in range(n):
        m = naive_order(t, x)
        y = x
        for j in range(2, m):
            y = t[y][x]
            if math.gcd(j, m) == 1 and y not in cls_of[x] and y not in cls_of[inv[x]]:
                return False, (x, j)
    return True, None


@pytest.fixture(scope="session")
def corpus_result():
    """One full corpus run shared by the corpus and acceptance tests."""
    return run_corpus(builtin_corpus())
