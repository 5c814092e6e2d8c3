"""Atoms, independency images, and recovering statements from them.

Every subset of variables 1..n has a set variable; the atoms of the field
they generate are the minimal regions of the diagram, one per choice of which
variables appear complemented.  A conditional independency statement leaves a
footprint: the set of atoms forced to carry zero measure.  This script
computes footprints, inverts them, and compares collections of statements
through them.
"""

from imeasure import (
    FCMI,
    NotAnFcmiImage,
    image_of_collection,
    image_of_fcmi,
    implies,
    recover_fcmi,
    recover_graph,
    image_of_graph,
    Graph,
)

# Mutual independence of three variables
k = FCMI.of(3, [], [[1], [2], [3]])
img = image_of_fcmi(k)
print("image of full mutual independence on 3 variables:")
for a in img:
    print("   ", a)

# The same footprint arises from two different-looking collections
pi1 = [FCMI.of(3, [], [[1], [2], [3]])]
pi2 = [FCMI.of(3, [], [[1, 2], [3]]), FCMI.of(3, [3], [[1], [2]])]
print("\ncollections differ:", pi1 != pi2)
print("images coincide:   ", image_of_collection(pi1) == image_of_collection(pi2))
print("mutual implication:", implies(pi1, pi2) and implies(pi2, pi1))

# A single statement is recoverable from its image
k2 = FCMI.of(3, [3], [[1], [2]])
print("\nrecovered:", recover_fcmi(image_of_fcmi(k2)).to_json())

# Not every atom set is a footprint
from imeasure import Atom, AtomSet

candidate = AtomSet.of(3, [Atom.of(3, [3]), Atom.of(3, [])])
try:
    recover_fcmi(candidate)
except NotAnFcmiImage as e:
    print("rejected non-image:", e)

# Graphs leave footprints too: the atoms whose complemented set separates them
c4 = Graph.cycle(4)
print("\n4-cycle image:", [str(a) for a in image_of_graph(c4)])
print("graph recovered from its image:", recover_graph(image_of_graph(c4)) == c4)
