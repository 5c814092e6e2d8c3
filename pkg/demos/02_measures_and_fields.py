"""From a joint distribution to the signed measure on atoms.

The measure generalizes entropy and mutual information: every Shannon
quantity is the sum of atoms inside the corresponding region.  On atoms of
three or more variables the measure can go negative; the two classic
constructions below pin down exactly how negative.
"""

from imeasure import (
    Atom,
    FCMI,
    FieldSpec,
    Graph,
    check_mrf,
    entropy_vector,
    fcmi_holds,
    measure_from_distribution,
    measure_of_expression,
    mu_from_entropy,
    nonnegativity_report,
    ring_field_witness,
    star_xor_witness,
)

# A hub carrying two fair bits, its three neighbors carrying each bit and
# their parity.  The field respects the star, yet one atom is negative.
star = Graph(4, [(1, 4), (2, 4), (3, 4)])
dist = star_xor_witness(star, 4, (1, 2, 3))
mu = measure_from_distribution(dist, base=2.0)

print("entropies:", {i: entropy_vector(dist).h([i]) for i in (1, 2, 3, 4)})
print("respects the star:", check_mrf(mu, star).ok)
print("triple interaction of the leaves:", measure_of_expression(mu, [1, 2, 3]))
print("negative atoms:", [(str(a), v) for a, v in nonnegativity_report(mu).negative_atoms])

# Independence statements either hold or fail under the measure
print("\nleaves independent given the hub:",
      fcmi_holds(FCMI.of(4, [4], [[1], [2], [3]]), mu))
print("leaf 1 independent of the rest:   ",
      fcmi_holds(FCMI.of(4, [], [[1], [2, 3, 4]]), mu))

# Around a ring, the construction spreads two field seeds; all entropies are
# 1 or 2 in base q, and the full atom carries -(n-2).
n, q = 5, 5
ring = ring_field_witness(n, FieldSpec(q), (1, 2, 3))
h = entropy_vector(ring, base=float(q))
mu_ring = mu_from_entropy(h)
print(f"\nring on {n} vertices over a {q}-element field (base {q}):")
print("singleton entropy:", h.h([1]), " pair entropy:", h.h([1, 3]))
print("full atom:", mu_ring.value(Atom.of(n, [])))
print("weight-(n-1) atom:", mu_ring.value(Atom.of(n, [2])))
print("respects the ring:", check_mrf(mu_ring, Graph.cycle(n)).ok)
