"""
Weak identities modulo a verbal subgroup
========================================

A5 is perfect, so modulo its commutator subgroup every word is trivial.
Yet g1 is not weak in A5 itself.  A chain through the commutator repairs
this: g1 is weak modulo [g1,g2], and [g1,g2] is weak at height 6.
"""

from weakid import make_group
from weakid.subgroups import quotient, verbal_image
from weakid.weak import check_weak, check_weak_modulo, verify_weak_star_chain

A5 = make_group("alt:5")
H = verbal_image(A5, ["[g1,g2]"])
print("verbal image of [g1,g2] in A5 has order", H.order)
print("quotient order", quotient(A5, H).group.order)

print("g1 modulo [g1,g2], height 1:", check_weak_modulo(A5, "g1", "[g1,g2]", 1).status.value)
print("g1 directly, heights 1..6:", [check_weak(A5, "g1", N).status.value for N in range(1, 7)])

r = verify_weak_star_chain(A5, [["g1"], ["[g1,g2]"], ["1"]], [1, 6])
for i, step in enumerate(r.steps, 1):
    print(f"step {i}: {step.status.value} at height {step.height}")
print("chain:", r.status.value)
