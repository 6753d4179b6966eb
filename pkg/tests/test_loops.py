import pytest

from greedymax.errors import InputError, LimitError
from greedymax.loops import (
    LoopMultigraph,
    alpha_k_bruteforce,
    alpha_k_min_loops,
    construct_extremal_loop_multigraph,
    enumerate_loop_realizations,
)
from greedymax.multiset import make_degree_sequence


def test_alpha_min_single_edge():
    assert alpha_k_min_loops(make_degree_sequence([1, 1]), 1) == 1


def test_alpha_min_all_loops_even_k():
    assert alpha_k_min_loops(make_degree_sequence([2, 2, 2]), 2) == 0


def test_alpha_min_regular_odd_k():
    assert alpha_k_min_loops(make_degree_sequence([3, 3, 3, 3]), 3) == 2


def test_alpha_min_rejects_odd_sum():
    with pytest.raises(InputError):
        alpha_k_min_loops(make_degree_sequence([1, 2]), 1)


def test_alpha_min_zero_degree_remark():
    for k in (1, 2, 3):
        for vals in ([1, 1], [2, 2, 2], [3, 3, 3, 3]):
            D = make_degree_sequence(vals)
            assert (
                alpha_k_min_loops(D.with_one(0), k)
                == alpha_k_min_loops(D, k) + 1
            )


def test_bruteforce_edgeless():
    G = LoopMultigraph.from_edges(5, [])
    assert alpha_k_bruteforce(G, 1) == 5
    assert alpha_k_bruteforce(G, 4) == 5


def test_bruteforce_single_loop():
    G = LoopMultigraph.from_edges(1, [(0, 0, 1)])
    assert alpha_k_bruteforce(G, 2) == 0
    assert alpha_k_bruteforce(G, 3) == 1


def test_bruteforce_triple_edge():
    G = LoopMultigraph.from_edges(2, [(0, 1, 3)])
    assert alpha_k_bruteforce(G, 1) == 1


def test_bruteforce_guard():
    G = LoopMultigraph.from_edges(15, [])
    with pytest.raises(LimitError):
        alpha_k_bruteforce(G, 1)


def test_enumerate_single_edge():
    outs = list(enumerate_loop_realizations(make_degree_sequence([1, 1])))
    assert len(outs) == 1


def test_enumerate_single_loop():
    outs = list(enumerate_loop_realizations(make_degree_sequence([2])))
    assert len(outs) == 1
    assert outs[0].edges == (((0, 0), 1),)


def test_enumerate_two_twos():
    outs = list(enumerate_loop_realizations(make_degree_sequence([2, 2])))
    assert len(outs) == 2  # double edge, or two loops


def test_enumerate_degrees_match():
    D = make_degree_sequence([1, 2, 3])
    for G in enumerate_loop_realizations(D):
        assert G.degree_sequence() == D


def test_enumerate_guard():
    with pytest.raises(LimitError):
        list(enumerate_loop_realizations(make_degree_sequence([1] * 7)))


def test_construct_single_even_vertex():
    G = construct_extremal_loop_multigraph(make_degree_sequence([2]), 2)
    assert G.edges == (((0, 0), 1),)


def test_construct_even_k_example():
    D = make_degree_sequence([1, 1, 4])
    G = construct_extremal_loop_multigraph(D, 2)
    assert G.degree_sequence() == D
    assert alpha_k_bruteforce(G, 2) == 2 == alpha_k_min_loops(D, 2)


def test_construct_odd_k_regular():
    D = make_degree_sequence([3, 3, 3, 3])
    G = construct_extremal_loop_multigraph(D, 3)
    assert G.degree_sequence() == D
    assert alpha_k_bruteforce(G, 3) == 2


def test_construct_rejects_bad_input():
    with pytest.raises(InputError):
        construct_extremal_loop_multigraph(make_degree_sequence([0, 2]), 2)
    with pytest.raises(InputError):
        construct_extremal_loop_multigraph(make_degree_sequence([1, 2]), 2)
    with pytest.raises(InputError):
        construct_extremal_loop_multigraph(make_degree_sequence([]), 2)


def test_loop_json_round_trip():
    G = LoopMultigraph.from_edges(3, [(0, 0, 2), (1, 2, 1)])
    assert LoopMultigraph.from_json(G.to_json()) == G
