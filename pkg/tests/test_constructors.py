"""Family constructors: relation checks and frozen structural facts."""

import numpy as np
import pytest

from cutlab.constructors import (
    GroupSpecDescriptor,
    abelian,
    construct,
    cyclic,
    dicyclic,
    heisenberg,
    metacyclic,
    permutation,
    product,
    quotient_spec,
    symmetric,
    table_spec,
)
from cutlab.errors import (
    InvalidMetacyclicParameters,
    InvalidParameters,
    NotAPrime,
    OrderCapExceeded,
)

CORPUS_METACYCLICS = [
    (12, 2, 5),
    (9, 9, 4),
    (3, 2, 2),
    (4, 2, 3),
    (8, 2, 3),
    (8, 2, 5),
    (5, 4, 2),
    (7, 3, 2),
]


@pytest.mark.parametrize("m, n, r", CORPUS_METACYCLICS)
def test_metacyclic_relations(m, n, r):
    G = construct(metacyclic(m, n, r))
    assert G.order == m * n
    a, b = 1, m
    assert G.element_order(a) == m
    # the defining relation b^-1 a b = a^r as an identity on indices
    lhs = G.mul(G.mul(G.inverse(b), a), b)
    assert lhs == G.power(a, r)
    # a^m = 1 and b^n = 1 in the split presentation
    assert G.power(a, m) == 0
    assert G.power(b, n) == 0


def test_metacyclic_element_labels():
    G = construct(metacyclic(9, 9, 4))
    assert G.label(0) == "1"
    assert G.label(1) == "a"
    assert G.label(9) == "b"
    assert G.label(9 + 3) == "a^3 b"


def test_metacyclic_paper_orders():
    assert construct(metacyclic(12, 2, 5)).order == 24
    assert construct(metacyclic(9, 9, 4)).order == 81


def test_metacyclic_distinct_class_counts():
    # semidihedral vs modular group of order 16 (frozen from the naive scan)
    sd16 = construct(metacyclic(8, 2, 3))
    m16 = construct(metacyclic(8, 2, 5))
    assert sd16.conjugacy.num_classes == 7
    assert m16.conjugacy.num_classes == 10


def test_metacyclic_invalid_parameters():
    with pytest.raises(InvalidMetacyclicParameters, match="gcd"):
        construct(metacyclic(9, 2, 3))
    with pytest.raises(InvalidMetacyclicParameters, match="7"):
        construct(metacyclic(9, 2, 4))  # 4^2 = 16 = 7 (mod 9)


def test_cyclic_trivial():
    G = construct(cyclic(1))
    assert G.order == 1
    assert G.conjugacy.num_classes == 1


def test_dicyclic_relations():
    for n in (1, 2, 3, 4):
        G = construct(dicyclic(n))
        assert G.order == 4 * n
        a, b = 1, 2 * n
        assert G.element_order(a) == 2 * n
        assert G.mul(b, b) == G.power(a, n)
        assert G.mul(G.mul(G.inverse(b), a), b) == G.inverse(a)


def test_dicyclic_2_is_quaternion():
    G = construct(dicyclic(2))
    assert G.order == 8
    assert int((G.element_orders == 2).sum()) == 1


def test_heisenberg_structure():
    for p in (3, 5, 7):
        G = construct(heisenberg(p))
        assert G.order == p ** 3
        assert G.profile.nilpotency_class == 2
        assert G.profile.exponent == p


def test_heisenberg_rejects_non_prime():
    with pytest.raises(NotAPrime):
        construct(heisenberg(9))
    with pytest.raises(NotAPrime):
        construct(heisenberg(2))


def test_abelian_factors():
    G = construct(abelian([4, 2]))
    assert G.order == 8 and G.is_abelian
    assert G.profile.exponent == 4
    assert construct(abelian([2, 2, 2])).profile.exponent == 2


def test_symmetric_family():
    assert construct(symmetric(1)).order == 1
    assert construct(symmetric(2)).order == 2
    assert construct(symmetric(3)).order == 6
    S4 = construct(symmetric(4))
    assert S4.order == 24 and S4.conjugacy.num_classes == 5


def test_permutation_descriptor():
    G = construct(permutation(3, [(1, 0, 2), (1, 2, 0)]))
    assert G.order == 6


def test_table_descriptor():
    G = construct(table_spec(2, [[0, 1], [1, 0]]))
    assert G.order == 2


def test_product_single_part_is_the_group_itself():
    for spec in (cyclic(6), metacyclic(4, 2, 3), dicyclic(2)):
        direct = construct(spec)
        wrapped = construct(product(spec))
        assert np.array_equal(wrapped.dense_table(), direct.dense_table())


def test_product_of_three():
    G = construct(product(cyclic(2), cyclic(2), cyclic(3)))
    assert G.order == 12 and G.is_abelian
    assert G.profile.exponent == 6


def test_quotient_descriptor():
    spec = quotient_spec(metacyclic(9, 9, 4), [3])  # mod out the central <a^3>
    G = construct(spec)
    assert G.order == 27


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        construct(cyclic(1000), max_order=100)
    with pytest.raises(OrderCapExceeded):
        construct(product(cyclic(50), cyclic(50)), max_order=1000)


def test_order_cap_environment_override(monkeypatch):
    monkeypatch.setenv("CUTLAB_MAX_ORDER", "10")
    with pytest.raises(OrderCapExceeded):
        construct(cyclic(50))
    assert construct(cyclic(10)).order == 10


def test_invalid_kind():
    with pytest.raises(InvalidParameters):
        construct(GroupSpecDescriptor("frobnicate"))


def test_every_constructed_family_passes_axioms():
    from cutlab.group_core import validate_group_axioms

    for spec in (
        cyclic(12),
        abelian([4, 4]),
        metacyclic(12, 2, 5),
        dicyclic(3),
        heisenberg(3),
        symmetric(3),
    ):
        validate_group_axioms(construct(spec))
