import math

import pytest

import intramorph as im


def test_index_bug_trace():
    assert im.bubble_sort([3, 1, 2], mutant="swap-index-i") == [1, 2, 1]
    assert im.bubble_sort([3, 1, 2]) == [1, 2, 3]
    assert im.bubble_sort_reverse([3, 1, 2]) == [3, 2, 1]
    assert im.reverse_relation([1, 2, 3], [3, 2, 1])
    assert not im.reverse_relation([1, 2, 1], [3, 2, 1])


def test_sorts_agree_with_sorted():
    arr = [5, -1, 3, 3, 0, 9, 2]
    for sort in (im.bubble_sort, im.insertion_sort, im.merge_sort):
        assert sort(arr) == sorted(arr)


def test_printers():
    e = im.Expr.operation(
        "*", im.Expr.operation("+", im.Expr.variable("a"), im.Expr.constant(3)), im.Expr.constant(2)
    )
    assert e.infix() == "(a + 3) * 2"
    assert e.prefix() == "* + a 3 2"
    assert e.postfix() == "a 3 + 2 *"
    assert e.tokens_agree()
    assert e.tokens_agree(mutant="paren-missing")
    assert e.node_count() == 5


def test_pi():
    est = im.pi_approximation(100_000, seed=42)
    assert abs(est - math.pi) < 0.02
    assert im.pi_approximation(1000, seed=7) == im.pi_approximation(1000, seed=7)
    with pytest.raises(ValueError):
        im.pi_approximation(0, seed=1)


def test_knapsack_witness():
    inst = im.KnapsackInstance([im.KnapsackItem("A", 7, 4), im.KnapsackItem("B", 4, 3)], 6)
    assert im.knapsack_greedy(inst).cum_value == 7
    exh = im.knapsack_exhaustive(inst)
    assert exh.cum_value == 8
    assert sorted(exh.packed) == ["B", "B"]
    assert im.dp_reference(inst) == 8
    with pytest.raises(ValueError):
        im.KnapsackInstance([im.KnapsackItem("A", 1, 0)], 3)


def test_campaign_listing():
    names = [c["name"] for c in im.campaigns()]
    assert "sorting-intramorphic" in names and len(names) >= 6
    blind = {m["name"] for m in im.mutants("ast-intramorphic") if m["blind_spot"]}
    assert blind == {"paren-missing"}


def test_run_campaign_report():
    report = im.run_campaign("sorting-intramorphic", seed=42, iterations=1000, mutant="swap-index-i")
    assert report["violations"] >= 1
    assert list(report)[0] == "schema_version" and list(report)[-1] == "wall_time_ms"
    again = im.run_campaign("sorting-intramorphic", seed=42, iterations=1000, mutant="swap-index-i")
    report.pop("wall_time_ms"), again.pop("wall_time_ms")
    assert report == again
    clean = im.run_campaign("knapsack-intramorphic", seed=3, iterations=200)
    assert clean["violations"] == 0 and "counterexample" not in clean


def test_configuration_errors():
    with pytest.raises(ValueError):
        im.run_campaign("nonexistent")
    with pytest.raises(ValueError):
        im.run_campaign("sorting-intramorphic", mutant="no-such-mutant")
    with pytest.raises(ValueError):
        im.run_campaign("montecarlo-convergence", k=4)
