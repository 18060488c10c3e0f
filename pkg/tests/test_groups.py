import json
import math
from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import ZOO, group
from oracles import perm_compose, perm_inverse
from weakid.groups import (
    GroupError,
    commutes,
    evaluate_word,
    exponent,
    from_cayley_table,
    load_cayley_file,
    make_group,
    parse_group_spec,
)
from weakid.words import Endomorphism, Word, apply_endo, multiply, parse_word


def perm_of(name, n):
    """Parse cycle notation into a dict on points 1..n."""
    s = {p: p for p in range(1, n + 1)}
    for cyc in name.strip("()").split(")("):
        pts = [int(x) for x in cyc.split()] if cyc else []
        for a, b in zip(pts, pts[1:] + pts[:1]):
            s[a] = b
    return s


def test_make_group_orders():
    assert make_group("cyclic:6").order == 6
    assert exponent(make_group("cyclic:6")) == 6
    S3 = make_group("sym:3")
    assert S3.order == 6 and not S3.is_abelian()
    # invertible 2x2 matrices over F_3: (9-1)(9-3)
    count = sum(1 for a, b, c, d in product(range(3), repeat=4) if (a * d - b * c) % 3)
    assert count == 48 == make_group("gl:2:3").order
    assert make_group("sl:2:3").order == 24
    assert make_group("alt:5").order == 60
    assert make_group("sym:5").order == 120
    assert make_group("dihedral:4").order == 8
    assert make_group("elab:3:2").order == 9
    assert make_group("trivial").order == 1


def test_symmetric3_table_matches_permutation_oracle():
    S3 = make_group("sym:3")
    perms = [perm_of(nm, 3) for nm in S3.names]
    assert sorted(tuple(sorted(p.items())) for p in perms) == sorted(
        tuple(sorted(zip((1, 2, 3), img))) for img in permutations((1, 2, 3))
    )
    for x, y in product(range(6), repeat=2):
        assert perms[S3.table[x, y]] == perm_compose(perms[x], perms[y])


def test_linear_group_table_is_matrix_product():
    G = make_group("gl:2:3")
    mats = [np.array([[int(v) for v in row.split()] for row in nm.strip("[]").split(";")]) for nm in G.names]
    for x, y in product(range(G.order), repeat=2):
        assert np.array_equal(mats[G.table[x, y]], (mats[x] @ mats[y]) % 3)


def test_invalid_specs():
    for bad in ["gl:2:4", "sl:2:5", "sym:6", "cyclic:0", "foo:3", "gl:3:2"]:
        with pytest.raises(GroupError):
            make_group(bad)
    with pytest.raises(GroupError):
        make_group("cyclic:400")
    assert make_group("cyclic:400", max_order=400).order == 400


def test_spec_roundtrip():
    for s in ["cyclic:6", "q8", "gl:2:3", "prod(sym:3,prod(cyclic:2,q8))", "elab:2:3"]:
        assert str(parse_group_spec(s)) == s


@pytest.mark.parametrize("spec", ZOO + ["sym:5"])
def test_group_axioms_full_scan(spec):
    G = group(spec)
    t = G.table
    ids = np.arange(G.order)
    assert np.array_equal(t[0], ids) and np.array_equal(t[:, 0], ids)
    if G.order <= 256:
        assert np.array_equal(t[t[:, :, None], ids[None, None, :]], t[ids[:, None, None], t[None, :, :]])
    assert all(t[x, G.inverse[x]] == 0 for x in range(G.order))


def test_evaluate_word_examples():
    S3 = make_group("sym:3")
    c = parse_word("[g1,g2]")
    for x in range(6):
        assert evaluate_word(S3, c, {1: x, 2: x}) == 0
    a, b = S3.element_id("(1 2)"), S3.element_id("(1 3)")
    pa, pb = perm_of("(1 2)", 3), perm_of("(1 3)", 3)
    expected = perm_compose(perm_compose(perm_compose(pa, pb), perm_inverse(pa)), perm_inverse(pb))
    value = evaluate_word(S3, c, {1: a, 2: b})
    assert perm_of(S3.names[value], 3) == expected
    assert S3.element_orders[value] == 3
    for x in range(6):
        assert evaluate_word(S3, parse_word("g1^6"), {1: x}) == 0
    with pytest.raises(KeyError):
        evaluate_word(S3, c, {1: a})


def test_commutes_examples():
    S3 = make_group("sym:3")
    e, t12, t13 = 0, S3.element_id("(1 2)"), S3.element_id("(1 3)")
    assert all(commutes(S3, e, x) for x in range(6))
    assert not commutes(S3, t12, t13)
    assert commutes(S3, S3.element_id("(1 2 3)"), S3.element_id("(1 3 2)"))


def test_exponent_examples():
    assert exponent(make_group("cyclic:6")) == 6
    S3 = make_group("sym:3")
    assert sorted(set(S3.element_orders)) == [1, 2, 3] and exponent(S3) == 6
    Q8 = make_group("q8")
    assert sorted(set(Q8.element_orders)) == [1, 2, 4] and exponent(Q8) == 4


@pytest.mark.parametrize("a, b", [("sym:3", "cyclic:4"), ("q8", "cyclic:3"), ("dihedral:3", "elab:2:2")])
def test_direct_product_order_and_exponent(a, b):
    G, H = group(a), group(b)
    P = make_group(f"prod({a},{b})")
    assert P.order == G.order * H.order
    assert exponent(P) == math.lcm(exponent(G), exponent(H))


small_words = st.lists(st.integers(1, 3).flatmap(lambda g: st.sampled_from([g, -g])), max_size=8).map(Word.from_letters)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ZOO), small_words, small_words, st.data())
def test_evaluate_word_homomorphism_laws(spec, u, v, data):
    G = group(spec)
    a = {i: data.draw(st.integers(0, G.order - 1)) for i in (1, 2, 3)}
    assert evaluate_word(G, multiply(u, v), a) == G.mul(evaluate_word(G, u, a), evaluate_word(G, v, a))
    e = Endomorphism({i: data.draw(small_words) for i in (1, 2, 3)})
    composed = {i: evaluate_word(G, e.image(i), a) for i in (1, 2, 3)}
    assert evaluate_word(G, apply_endo(e, u), a) == evaluate_word(G, u, composed)


def test_cayley_file_roundtrip(tmp_path):
    G = make_group("q8")
    path = tmp_path / "q8.json"
    path.write_text(json.dumps({k: v for k, v in G.to_dict().items() if k != "label"}))
    H = load_cayley_file(path)
    assert H.order == 8 and H.names == G.names and np.array_equal(H.table, G.table)
    assert make_group(f"file:{path}").order == 8


def test_cayley_loader_rejects_bad_tables():
    good = make_group("sym:3").to_dict()
    swapped = [row[:] for row in good["table"]]
    swapped[1], swapped[2] = swapped[2], swapped[1]
    with pytest.raises(GroupError):
        from_cayley_table({**good, "table": swapped})  # identity row broken
    with pytest.raises(GroupError):
        from_cayley_table({**good, "generators": [1]})  # (1 2 3) alone generates A3
    nonassoc = [[0, 1, 2], [1, 0, 2], [2, 2, 0]]
    with pytest.raises(GroupError):
        from_cayley_table({"order": 3, "table": nonassoc})
    with pytest.raises(GroupError):
        from_cayley_table({"order": 2, "table": [[0, 1]]})
