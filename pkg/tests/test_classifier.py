import pytest
from hypothesis import given, settings

from kl_oracle import brute_kappa, brute_lambda, brute_line_roots, in_s_k
from powercw.classifier import (
    DisconnectedInput,
    EmptyFamily,
    RootCapExceeded,
    Verdict,
    classify_bigenic,
    classify_monogenic,
    classify_set,
    in_s,
    in_t,
    kappa,
    lambda_,
    line_roots,
    recognize_path,
    recognize_spider,
    recognize_t_spider,
    recognize_union_of_paths,
)
from powercw.experiments import graphs_up_to
from powercw.generators import complete, copies, cycle, path, spider, star, t_spider
from powercw.graph import INFINITE, disjoint_union, is_connected
from powercw.iso import is_isomorphic
from strategies import connected_graphs

CLAW = star(3)
BULL = t_spider(1, 2, 2)


def test_path_recognition_examples():
    assert recognize_path(path(7)) == 6
    p3p2 = disjoint_union(path(3), path(2))
    assert recognize_union_of_paths(p3p2) and recognize_path(p3p2) is None
    assert not recognize_union_of_paths(CLAW)


def test_spider_recognition_examples():
    assert recognize_spider(CLAW).astuple() == (1, 1, 1)
    assert recognize_spider(spider(2, 2, 2)).astuple() == (2, 2, 2)
    assert recognize_spider(star(4)) is None
    with pytest.raises(DisconnectedInput):
        recognize_spider(disjoint_union(path(2), path(2)))


def test_line_root_examples():
    roots = line_roots(complete(3))
    assert len(roots) == 2
    assert is_isomorphic(roots[0], complete(3)) and is_isomorphic(roots[1], CLAW)
    assert line_roots(CLAW) == []
    (root,) = line_roots(BULL)
    assert is_isomorphic(root, spider(1, 2, 2))
    with pytest.raises(RootCapExceeded):
        line_roots(path(14))


def test_t_spider_examples():
    assert recognize_t_spider(BULL).astuple() == (1, 2, 2)
    assert recognize_t_spider(complete(3)).astuple() == (1, 1, 1)
    assert recognize_t_spider(cycle(4)) is None


def test_membership_examples():
    assert in_s(disjoint_union(path(5), CLAW))
    assert in_t(disjoint_union(complete(3), BULL))
    assert not in_s(cycle(5)) and not in_t(cycle(5))


def test_kappa_lambda_anchors():
    assert kappa(star(4)) == 0
    assert kappa(cycle(5)) == 4
    assert kappa(path(10)) == INFINITE
    assert lambda_(CLAW) == 0
    assert lambda_(complete(3)) == INFINITE
    assert lambda_(cycle(6)) == 5


def test_monogenic_examples():
    assert classify_monogenic(path(6)).verdict is Verdict.BOUNDED
    c4 = classify_monogenic(cycle(4))
    assert c4.verdict is Verdict.UNBOUNDED and c4.reason == "cycle-large-girth"
    claw = classify_monogenic(CLAW)
    assert claw.verdict is Verdict.UNBOUNDED and claw.reason == "claw-unit-interval"


def test_bigenic_examples():
    assert classify_bigenic(CLAW, BULL).verdict is Verdict.BOUNDED
    c = classify_bigenic(spider(2, 2, 2), complete(3))
    assert (c.verdict, c.reason) == (Verdict.UNBOUNDED, "contains-S222")
    c = classify_bigenic(cycle(4), cycle(5))
    assert (c.verdict, c.reason) == (Verdict.UNBOUNDED, "no-common-S-or-T")
    c = classify_bigenic(path(4), complete(5))
    assert (c.verdict, c.reason) == (Verdict.BOUNDED, "path")
    with pytest.raises(DisconnectedInput):
        classify_bigenic(disjoint_union(path(2), path(1)), CLAW)


def test_set_examples():
    assert classify_set([complete(3), cycle(4)]).verdict is Verdict.UNBOUNDED
    assert classify_set([path(5), cycle(7)]).verdict is Verdict.BOUNDED
    with pytest.raises(EmptyFamily):
        classify_set([])


def test_two_claws_alone_are_unbounded_through_lambda():
    # 2K_{1,3} is not a line graph, so lambda is 0 and the class is decided.
    c = classify_set([copies(2, CLAW)])
    assert lambda_(copies(2, CLAW)) == 0
    assert (c.verdict, c.reason) == (Verdict.UNBOUNDED, "lambda-finite")


def test_family_outside_the_decided_cases_is_unknown():
    c = classify_set([copies(2, CLAW), copies(2, complete(3))])
    assert (c.verdict, c.reason) == (Verdict.UNKNOWN, "outside-decided-cases")


def test_witness_json_shape():
    d = classify_bigenic(spider(1, 1, 1), t_spider(2, 2, 2)).as_dict()
    assert d["verdict"] == "PowerUnbounded" and d["reason"] == "contains-T222"
    assert set(d) == {"verdict", "reason", "witness"}


def test_kappa_matches_direct_membership_up_to_seven_vertices():
    for g in graphs_up_to(7):
        assert kappa(g) == brute_kappa(g), g


def test_kappa_anchor_membership_pattern():
    assert not in_s_k(star(4), 3)
    assert in_s_k(cycle(5), 4) and not in_s_k(cycle(5), 5)
    assert all(in_s_k(path(10), k) for k in range(3, 11))


def test_lambda_anchors_match_oracle():
    for g, want in ((CLAW, 0), (complete(3), INFINITE), (cycle(6), 5)):
        assert brute_lambda(g) == lambda_(g) == want


def test_infinite_parameters_match_membership_on_connected_graphs():
    for g in graphs_up_to(6):
        if not is_connected(g):
            continue
        assert (kappa(g) == INFINITE) == in_s(g)
        assert (lambda_(g) == INFINITE) == in_t(g)
        assert lambda_(g) == brute_lambda(g), g


def test_line_roots_match_oracle():
    for g in graphs_up_to(6):
        if not is_connected(g):
            continue
        fast = line_roots(g)
        slow = brute_line_roots(g)
        assert len(fast) == len(slow), g
        assert all(any(is_isomorphic(a, b) for b in slow) for a in fast)


@pytest.mark.parametrize(
    "p", [(i, j, k) for i in range(1, 9) for j in range(i, 9) for k in range(j, 9) if i + j + k <= 10]
)
def test_t_spider_roundtrip(p):
    assert recognize_t_spider(t_spider(*p)).astuple() == p


def test_monogenic_agrees_with_set_cascade():
    for g in graphs_up_to(6):
        assert classify_set([g]).verdict is classify_monogenic(g).verdict, g


@settings(max_examples=40)
@given(connected_graphs(max_n=9), connected_graphs(max_n=9))
def test_bigenic_is_symmetric(a, b):
    x, y = classify_bigenic(a, b), classify_bigenic(b, a)
    assert (x.verdict, x.reason) == (y.verdict, y.reason)


def test_bigenic_symmetric_on_spider_like_pairs():
    pool = [path(3), CLAW, BULL, spider(1, 1, 2), spider(1, 2, 2), spider(2, 2, 2), t_spider(1, 1, 2),
            t_spider(2, 2, 2), complete(3), cycle(4), spider(1, 1, 5), t_spider(1, 1, 5)]
    for a in pool:
        for b in pool:
            x, y = classify_bigenic(a, b), classify_bigenic(b, a)
            assert (x.verdict, x.reason) == (y.verdict, y.reason)
