"""
Sampling a verbal subgroup
==========================

Elements of the verbal subgroup generated by [g1,g2] are products of
endomorphic images of the commutator.  They stay weak at the same height.
"""

from weakid import make_group
from weakid.weak import SamplingBudget, check_weak, sample_t_subgroup

Q8 = make_group("q8")
samples = sample_t_subgroup(["[g1,g2]"], SamplingBudget(count=6, identity_first=False), seed=1)
for w in samples:
    print(w)
print("all weak at height 2 in Q8:", check_weak(Q8, samples, 2).status.value)
