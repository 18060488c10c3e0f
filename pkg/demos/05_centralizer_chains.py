"""
Centralizer chains
==================

Adding commuting elements one at a time shrinks the centralizer.  The
longest strictly descending run bounds the height of the commutator.
"""

from weakid import make_group
from weakid.bcs import max_centralizer_chain

for spec in ["cyclic:6", "sym:3", "q8", "sym:4", "gl:2:3", "sym:5"]:
    ch = max_centralizer_chain(make_group(spec))
    steps = " > ".join(str(e["centralizer_order"]) for e in ch.to_json())
    added = [e["added_element"] for e in ch.to_json()[1:]]
    print(f"{spec:8s} length {ch.length}: {steps}   added {added}")
