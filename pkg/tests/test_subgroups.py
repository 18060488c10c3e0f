import random
from itertools import product

import pytest

from conftest import SMALL_ZOO, ZOO, group
from weakid.groups import evaluate_word
from weakid.subgroups import (
    BudgetExceeded,
    NotNormal,
    Subgroup,
    centralizer,
    generated_subgroup,
    is_normal,
    normal_closure,
    quotient,
    verbal_image,
)
from weakid.words import parse_word


def ids(G, *names):
    return {G.element_id(n) for n in names}


def test_generated_subgroup_examples(S3):
    assert generated_subgroup(S3, []).elements == [0]
    assert generated_subgroup(S3, ids(S3, "(1 2 3)")).elements == sorted(ids(S3, "()", "(1 2 3)", "(1 3 2)"))
    assert generated_subgroup(S3, ids(S3, "(1 2)", "(1 2 3)")).is_whole()


def test_normal_closure_examples(S3):
    assert normal_closure(S3, [0]).is_trivial()
    assert normal_closure(S3, ids(S3, "(1 2)")).is_whole()
    assert normal_closure(S3, ids(S3, "(1 2 3)")).order == 3


def test_centralizer_examples(S3):
    assert centralizer(S3, []).is_whole()
    assert centralizer(S3, ids(S3, "(1 2)")).elements == sorted(ids(S3, "()", "(1 2)"))
    assert centralizer(S3, ids(S3, "(1 2 3)")).elements == sorted(ids(S3, "()", "(1 2 3)", "(1 3 2)"))


def test_verbal_image_examples(S3):
    assert verbal_image(S3, ["g1"]).is_whole()
    assert verbal_image(S3, ["[g1,g2]"]).order == 3
    assert verbal_image(group("cyclic:6"), ["g1^2"]).elements == [0, 2, 4]
    assert verbal_image(S3, ["1"]).is_trivial()


def test_verbal_image_matches_raw_enumeration(S3):
    c = parse_word("[g1,g2]")
    values = {evaluate_word(S3, c, {1: a, 2: b}) for a, b in product(range(6), repeat=2)}
    assert set(verbal_image(S3, [c]).elements) == values


def test_verbal_image_rejects_huge_enumeration():
    with pytest.raises(BudgetExceeded):
        verbal_image(group("alt:5"), ["g1*g2*g3*g4"])


def test_quotient_examples(S3):
    Q = quotient(S3, Subgroup(S3, 1))
    assert Q.group.order == 6 and list(Q.projection) == list(range(6))
    assert quotient(S3, verbal_image(S3, ["[g1,g2]"])).group.order == 2
    A5 = group("alt:5")
    assert quotient(A5, verbal_image(A5, ["[g1,g2]"])).group.order == 1
    with pytest.raises(NotNormal):
        quotient(S3, generated_subgroup(S3, ids(S3, "(1 2)")))


@pytest.mark.parametrize("spec", ZOO)
def test_centralizer_antitone(spec):
    G = group(spec)
    rng = random.Random(spec)
    for _ in range(20):
        P = set(rng.sample(range(G.order), rng.randint(0, min(3, G.order))))
        Q = P | set(rng.sample(range(G.order), rng.randint(0, min(3, G.order))))
        assert centralizer(G, Q) <= centralizer(G, P)


WORD_POOL = ["g1", "g1^2", "g1^3", "[g1,g2]", "g1^2*g2^2", "[[g1,g2],g3]", "g1^4"]


@pytest.mark.parametrize("spec", ZOO)
def test_verbal_images_are_normal_and_union_law(spec):
    G = group(spec)
    rng = random.Random(spec)
    images = {w: verbal_image(G, [w]) for w in WORD_POOL if not (G.order > 24 and w == "[[g1,g2],g3]")}
    t = G.tlist
    for H in images.values():
        for g in range(G.order):
            for h in H.elements:
                assert t[t[g][h]][G.inverse[g]] in H
        assert is_normal(G, H)
    ws = list(images)
    for _ in range(5):
        a, b = rng.sample(ws, 2)
        both = verbal_image(G, [a, b])
        assert images[a] <= both and images[b] <= both
        assert both == generated_subgroup(G, images[a].elements + images[b].elements)


@pytest.mark.parametrize("spec", SMALL_ZOO + ["alt:4", "sl:2:3"])
def test_quotient_projection_is_homomorphism_with_exact_kernel(spec):
    G = group(spec)
    for w in ["[g1,g2]", "g1^2", "1"]:
        N = verbal_image(G, [w])
        Q = quotient(G, N)
        p = Q.projection
        assert G.order == N.order * Q.group.order
        for a, b in product(range(G.order), repeat=2):
            assert p[G.tlist[a][b]] == Q.group.tlist[p[a]][p[b]]
        assert [x for x in range(G.order) if p[x] == 0] == N.elements
