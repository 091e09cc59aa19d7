import math
from fractions import Fraction

import pytest

from treelift.families import (
    NAMED,
    NAMED_STATS,
    FamilySpec,
    GenerationError,
    girth_diam_ratio,
    load_named,
    make,
    parse_family,
    random_regular,
)
from treelift.graph import GraphError, build_graph, diameter, girth, is_connected


def test_cycle_family():
    g = make(FamilySpec.cycle(5))
    assert g.regularity() == 2
    assert girth(g) == 5 and diameter(g) == 2


def test_complete_family():
    g = make(FamilySpec.complete(5))
    assert g.regularity() == 4 and g.m == 10
    assert girth(g) == 3 and diameter(g) == 1


def test_family_validation():
    with pytest.raises(GraphError):
        make(FamilySpec.cycle(2))
    with pytest.raises(GraphError):
        make(FamilySpec.complete(2))
    with pytest.raises(GraphError):
        make(FamilySpec(kind="nope"))


@pytest.mark.parametrize("name", NAMED)
def test_named_graphs_rederived_by_oracles(name):
    g = load_named(name)
    k, n, m, gi, di = NAMED_STATS[name]
    assert g.regularity() == k
    assert g.n == n and g.m == m
    assert girth(g) == gi
    assert diameter(g) == di
    assert is_connected(g)


def test_parse_family_strings():
    assert parse_family("petersen") == FamilySpec.named("petersen")
    assert parse_family("cycle:6") == FamilySpec.cycle(6)
    assert parse_family("complete:4") == FamilySpec.complete(4)
    spec = parse_family("random:20:3")
    assert (spec.kind, spec.n, spec.k) == ("random_regular", 20, 3)
    for bad in ("petersen:1", "cycle", "cycle:x", "random:20", "blah"):
        with pytest.raises(GraphError):
            parse_family(bad)


@pytest.mark.parametrize("seed", range(8))
def test_random_regular_invariants(seed):
    g = random_regular(20, 3, girth_min=5, seed=seed)
    assert g.n == 20
    assert g.regularity() == 3
    assert is_connected(g)
    assert girth(g) >= 5


def test_random_regular_reproducible():
    a = random_regular(16, 3, girth_min=4, seed=42)
    b = random_regular(16, 3, girth_min=4, seed=42)
    assert a.edges == b.edges
    c = random_regular(16, 3, girth_min=4, seed=43)
    assert c.edges != a.edges


def test_random_regular_explicit_exhaustion():
    # girth 8 on 14 cubic vertices is impossible (Tutte-Coxeter needs 30)
    with pytest.raises(GenerationError) as exc:
        random_regular(14, 3, girth_min=8, seed=0, max_tries=50)
    assert exc.value.tries == 50


def test_random_regular_rejects_bad_parameters():
    with pytest.raises(GraphError):
        random_regular(15, 3)  # odd n*k
    with pytest.raises(GraphError):
        random_regular(20, 2)
    with pytest.raises(GraphError):
        random_regular(3, 3)


def test_girth_diam_ratio_exact():
    assert girth_diam_ratio(load_named("petersen")) == Fraction(5, 2)
    assert girth_diam_ratio(load_named("heawood")) == Fraction(2)
    for r in (2, 3, 4):
        g = make(FamilySpec.cycle(2 * r))
        assert girth_diam_ratio(g) == 2


def test_girth_diam_ratio_errors():
    with pytest.raises(GraphError):
        girth_diam_ratio(build_graph(3, [(0, 1), (1, 2)]))  # forest
    assert girth(build_graph(2, [(0, 1)])) == math.inf
