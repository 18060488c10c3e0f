import pytest

from conftest import SMALL_ZOO, ZOO, group
from weakid.bcs import IncompleteChain, bcs_height_bound, max_centralizer_chain
from weakid.subgroups import centralizer


def brute_chain_length(G):
    """Longest strictly descending centralizer chain by plain DFS over commuting sets."""
    best = 1

    def dfs(P, cen, depth):
        nonlocal best
        best = max(best, depth)
        for x in range(G.order):
            if x in P or not all(G.tlist[x][p] == G.tlist[p][x] for p in P):
                continue
            nxt = centralizer(G, P | {x})
            if nxt.order < cen.order:
                dfs(P | {x}, nxt, depth + 1)

    dfs(frozenset(), centralizer(G, []), 1)
    return best


def test_examples():
    assert max_centralizer_chain(group("trivial")).length == 1
    S3 = group("sym:3")
    ch = max_centralizer_chain(S3)
    assert ch.length == 2 and ch.verify()
    assert [c.order for c in ch.centralizers] == [6, 3]
    assert max_centralizer_chain(group("gl:2:3")).length <= 5
    assert bcs_height_bound(group("q8")) == 2
    assert bcs_height_bound(group("cyclic:6")) == 1


@pytest.mark.parametrize("spec", SMALL_ZOO + ["alt:4"])
def test_matches_brute_force(spec):
    G = group(spec)
    assert max_centralizer_chain(G).length == brute_chain_length(G)


@pytest.mark.parametrize("spec", ZOO + ["sym:5"])
def test_chain_reverifies(spec):
    ch = max_centralizer_chain(group(spec))
    assert ch.complete and ch.verify()
    sets = ch.sets
    for a, b in zip(sets, sets[1:]):
        assert set(a) < set(b)
    orders = [e["centralizer_order"] for e in ch.to_json()]
    assert orders == sorted(orders, reverse=True) and len(set(orders)) == len(orders)


@pytest.mark.parametrize("spec", ["gl:2:2", "gl:2:3", "sl:2:2", "sl:2:3"])
def test_linear_groups_within_matrix_dimension_bound(spec):
    assert bcs_height_bound(group(spec)) <= 5


def test_cap_flags_incomplete():
    G = group("sym:5")
    ch = max_centralizer_chain(G, cap=2)
    assert not ch.complete and ch.verify()
    with pytest.raises(IncompleteChain):
        bcs_height_bound(G, cap=2)


def test_abelian_groups_have_length_one():
    for spec in ZOO:
        G = group(spec)
        if G.is_abelian():
            assert bcs_height_bound(G) == 1


def test_tampered_chain_fails_verification():
    G = group("sym:4")
    ch = max_centralizer_chain(G)
    assert len(ch.added) >= 2
    a = ch.added[0]
    ch.added[1] = next(x for x in range(G.order) if G.tlist[x][a] != G.tlist[a][x])
    assert not ch.verify()
