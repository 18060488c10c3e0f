"""
Words and small groups
======================

Free-group words, reduction, and evaluation in a Cayley-table group.
"""

from weakid import make_group, parse_word
from weakid.groups import evaluate_word, exponent

# words reduce as they are built
c = parse_word("[g1,g2]")
print("commutator:", c)
print("g1 g2 (g2^-1 g1^-1) reduces to:", parse_word("g1 g2 (g2^-1 g1^-1)"))

# elements are numbered from the generators, identity first
S3 = make_group("sym:3")
print(S3.label, "elements:", S3.names)

# the commutator of two transpositions is a 3-cycle
a, b = S3.element_id("(1 2)"), S3.element_id("(1 3)")
print("[(1 2),(1 3)] =", S3.names[evaluate_word(S3, c, {1: a, 2: b})])

for spec in ["cyclic:6", "sym:3", "q8", "gl:2:3"]:
    G = make_group(spec)
    print(f"{spec:10s} order {G.order:3d}  exponent {exponent(G)}")
