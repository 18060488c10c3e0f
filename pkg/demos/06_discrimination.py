"""
Discriminating groups
=====================

A finite group is tested against every homomorphism G x G -> G.  Only the
trivial group passes; the others come with a small certificate.  Free
abelian groups pass, and a separating integer matrix is built step by step.
"""

from weakid import make_group
from weakid.disc import FreeAbelianGroup, abelian_weak_equals_identity, extend_discrimination, is_discriminating_finite

for spec in ["trivial", "cyclic:2", "cyclic:6", "sym:3", "q8"]:
    v = is_discriminating_finite(make_group(spec))
    print(f"{spec:9s} {v.status.value:19s} certificate {v.to_dict()['certificate']}")

m = extend_discrimination(FreeAbelianGroup(1), 2, [(1, 2), (2, -1)])
print("Z^1, targets (1,2), (2,-1): matrix", m.matrix.tolist(), "images", m((1, 2)), m((2, -1)))

m = extend_discrimination(FreeAbelianGroup(2), 3, [(1, 0, 0, 1, 2, 2), (0, 0, 0, 0, 1, -1)])
print("Z^2, n=3: matrix", m.matrix.tolist())

Z2 = FreeAbelianGroup(2)
for w in ["[g1,g2]", "g1^2*g2", "g1*g2*g1^-1"]:
    v = abelian_weak_equals_identity(w, Z2)
    print(f"{w:12s} identity in Z^2: {v.is_identity}  ({v.explanation})")
