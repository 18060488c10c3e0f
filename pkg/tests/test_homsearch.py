import random

import pytest

from conftest import SMALL_ZOO, group
from oracles import all_endomorphisms_brute, naive_noncollapsing, random_instance
from weakid.homsearch import (
    SearchBudget,
    endomorphisms,
    find_noncollapsing_multicopy,
    product_homs_to_G,
    resolve_threads,
)
from weakid.subgroups import BudgetExceeded
from weakid.words import parse_word


def test_commutator_witness_on_s3(S3):
    w, stats = find_noncollapsing_multicopy(S3, ["[g1,g2]"])
    assert w is not None and w.verify(S3, [parse_word("[g1,g2]")])
    # canonical order: least g1 that has a non-commuting partner, then least partner
    assert w.to_json(S3) == [{"copy": 1, "assignment": {"g1": "(1 2 3)", "g2": "(1 2)"}}]
    assert w.copies == (naive_noncollapsing(S3, [parse_word("[g1,g2]")])[0],)
    assert stats.nodes_expanded > 0


def test_commutator_two_copies_on_s3_exhausts(S3):
    w, stats = find_noncollapsing_multicopy(S3, ["[g1,g2]", "[g1,g2]"])
    assert w is None
    assert naive_noncollapsing(S3, [parse_word("[g1,g2]")] * 2) is None


def test_cyclic6_squares_three_copies():
    C6 = group("cyclic:6")
    w, stats = find_noncollapsing_multicopy(C6, ["g1^2"] * 3)
    assert w is not None and w.verify(C6, [parse_word("g1^2")] * 3)
    assert [c[1] for c in w.copies] == [1, 1, 1]
    assert stats.prunes_by_centralizer == 0


def test_empty_or_trivial_targets(S3):
    w, _ = find_noncollapsing_multicopy(S3, ["1"])
    assert w is None
    w, _ = find_noncollapsing_multicopy(group("trivial"), ["g1"])
    assert w is None


@pytest.mark.parametrize("seed", range(4))
def test_agrees_with_naive_enumerator(seed):
    rng = random.Random(seed)
    for _ in range(15):
        spec, targets = random_instance(rng, SMALL_ZOO)
        G = group(spec)
        w, _ = find_noncollapsing_multicopy(G, targets)
        oracle = naive_noncollapsing(G, targets)
        assert (w is None) == (oracle is None), (spec, [str(t) for t in targets])
        if w is not None:
            assert w.verify(G, targets)
            assert list(w.copies) == oracle


@pytest.mark.parametrize("seed", range(3))
def test_monotone_in_extra_copy(seed):
    rng = random.Random(100 + seed)
    checked = 0
    while checked < 8:
        spec, targets = random_instance(rng, SMALL_ZOO)
        G = group(spec)
        w, _ = find_noncollapsing_multicopy(G, targets)
        if w is not None:
            continue
        checked += 1
        extra = targets + [rng.choice(targets)]
        assert find_noncollapsing_multicopy(G, extra)[0] is None


def test_budget_exceeded_is_not_exhaustion():
    A5 = group("alt:5")
    with pytest.raises(BudgetExceeded) as info:
        find_noncollapsing_multicopy(A5, ["[g1,g2]"] * 6, SearchBudget(node_cap=50))
    assert info.value.stats is not None
    assert info.value.stats.nodes_expanded >= 50


def test_parallel_matches_sequential():
    for spec, targets in [
        ("sym:3", ["[g1,g2]"]),
        ("q8", ["[g1,g2]", "[g1,g2]"]),
        ("alt:4", ["g1^2", "g1^3"]),
        ("sl:2:3", ["[g1,g2]", "g1^4"]),
    ]:
        G = group(spec)
        w1, s1 = find_noncollapsing_multicopy(G, targets, threads=1)
        w4, s4 = find_noncollapsing_multicopy(G, targets, threads=4, parallel_min_work=0)
        assert w1 == w4
        d1, d4 = s1.to_dict(), s4.to_dict()
        d1.pop("wall_time"), d4.pop("wall_time")
        assert d1 == d4


def test_resolve_threads(monkeypatch):
    monkeypatch.delenv("WEAKID_THREADS", raising=False)
    assert resolve_threads(None) == 1
    monkeypatch.setenv("WEAKID_THREADS", "3")
    assert resolve_threads(None) == 3
    assert resolve_threads(2) == 2


@pytest.mark.parametrize("spec, count", [("elab:2:2", 16), ("cyclic:6", 6), ("sym:3", 10), ("trivial", 1)])
def test_endomorphism_counts(spec, count):
    G = group(spec)
    ends = endomorphisms(G)
    assert len(ends) == count
    assert sorted(e.full_map for e in ends) == sorted(all_endomorphisms_brute(G))
    maps = {e.full_map for e in ends}
    assert tuple(range(G.order)) in maps and (0,) * G.order in maps


@pytest.mark.parametrize("spec", SMALL_ZOO + ["alt:4", "sl:2:3"])
def test_endomorphisms_pass_full_table_check(spec):
    G = group(spec)
    for e in endomorphisms(G):
        assert e.is_homomorphism(G)


def test_endomorphism_cap():
    with pytest.raises(BudgetExceeded):
        endomorphisms(group("alt:5"))


def test_product_homs_examples():
    assert len(list(product_homs_to_G(group("trivial")))) == 1
    assert len(list(product_homs_to_G(group("cyclic:2")))) == 4
    S3 = group("sym:3")
    pairs = list(product_homs_to_G(S3))
    t = S3.tlist
    n = 0
    for phi in endomorphisms(S3):
        for psi in endomorphisms(S3):
            ok = all(t[phi(x)][psi(y)] == t[psi(y)][phi(x)] for x in range(6) for y in range(6))
            n += ok
    assert len(pairs) == n
    for phi, psi in pairs:
        abelian = [all(t[a][b] == t[b][a] for a in set(f.full_map) for b in set(f.full_map)) for f in (phi, psi)]
        assert any(abelian)
        # (a, b) -> phi(a) psi(b) is a homomorphism of the direct product
        for a1, b1, a2, b2 in [(1, 2, 3, 4), (2, 5, 1, 1), (4, 3, 5, 2)]:
            lhs = t[phi(t[a1][a2])][psi(t[b1][b2])]
            rhs = t[t[phi(a1)][psi(b1)]][t[phi(a2)][psi(b2)]]
            assert lhs == rhs
