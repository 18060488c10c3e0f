"""
Powers in the symmetric group on three points
=============================================

g1^6 is an identity of S3, so it is weak at height 1.  A proper power
g1^k never becomes weak: putting the same element in every copy keeps
it alive at any height.
"""

from weakid import check_weak, make_group

S3 = make_group("sym:3")
print("g1^6 at height 1:", check_weak(S3, "g1^6", 1).status.value)

for k in range(1, 6):
    v = check_weak(S3, f"g1^{k}", 6)
    names = {e["assignment"]["g1"] for e in v.to_dict()["witness"]}
    print(f"g1^{k} at height 6: {v.status.value}, every copy sends g1 to {names}")
