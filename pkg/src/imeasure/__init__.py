"""Signed information measures on atoms, Markov random fields, and subfields.

The package turns joint distributions into entropy vectors and the unique
signed measure on set-variable atoms, classifies atoms against undirected
graphs, builds the boundary graph representing any sub-collection of the
variables, tests when tree structure survives restriction, generates the
standard witness distributions, and emits recursive construction plans for
customized information diagrams.
"""

from .atoms import (
    Atom,
    AtomSet,
    AtomType,
    FCMI,
    NotAnFcmiImage,
    all_atoms,
    image_of_collection,
    image_of_fcmi,
    image_of_fcmi_by_parts,
    image_of_graph,
    image_of_partial,
    implies,
    recover_fcmi,
    recover_graph,
    type_of_atom,
)
from .diagram import (
    Action,
    DiagramPlan,
    build_plan,
    classify_atom,
    elimination_sequence,
    export_plan,
    parse_plan,
)
from .graphs import Graph, ShapeLabel, classify_shape, clique_edges, maximal_cliques
from .measures import (
    ChainInequalityCheck,
    Distribution,
    EntropyVector,
    IMeasureVector,
    MrfCheck,
    NonnegativityReport,
    Reduction,
    atom_measure_from_distribution,
    chain_inequality_valid,
    check_mrf,
    entropy_from_mu,
    entropy_vector,
    fcmi_holds,
    generate_mrf,
    marginal_entropy,
    measure_from_distribution,
    measure_of_expression,
    measure_of_groups,
    mu_from_entropy,
    nonnegativity_report,
    prefix_relabel,
    reduce_atom,
    restrict_entropy,
    vanishing_atoms,
    verify_reduction,
)
from .subfield import (
    SmallestRepResult,
    SubfieldResult,
    SubtreeCheck,
    boundary_set,
    cutset_lift,
    equals_induced,
    g_star_closed_form,
    g_star_elimination,
    g_star_paths,
    minimality_witness,
    smallest_graph,
    subfield_graph,
    subtree_condition,
)
from .witnesses import FieldSpec, atom_concentrator, ring_field_witness, source_entropy, star_xor_witness

__version__ = "0.1.0"

__all__ = [
    "Action",
    "Atom",
    "AtomSet",
    "AtomType",
    "ChainInequalityCheck",
    "DiagramPlan",
    "Distribution",
    "EntropyVector",
    "FCMI",
    "FieldSpec",
    "Graph",
    "IMeasureVector",
    "MrfCheck",
    "NonnegativityReport",
    "NotAnFcmiImage",
    "Reduction",
    "ShapeLabel",
    "SmallestRepResult",
    "SubfieldResult",
    "SubtreeCheck",
    "all_atoms",
    "atom_concentrator",
    "atom_measure_from_distribution",
    "boundary_set",
    "build_plan",
    "chain_inequality_valid",
    "check_mrf",
    "classify_atom",
    "classify_shape",
    "clique_edges",
    "cutset_lift",
    "elimination_sequence",
    "entropy_from_mu",
    "entropy_vector",
    "equals_induced",
    "export_plan",
    "fcmi_holds",
    "g_star_closed_form",
    "g_star_elimination",
    "g_star_paths",
    "generate_mrf",
    "image_of_collection",
    "image_of_fcmi",
    "image_of_fcmi_by_parts",
    "image_of_graph",
    "image_of_partial",
    "implies",
    "marginal_entropy",
    "maximal_cliques",
    "measure_from_distribution",
    "measure_of_expression",
    "measure_of_groups",
    "minimality_witness",
    "mu_from_entropy",
    "nonnegativity_report",
    "parse_plan",
    "prefix_relabel",
    "recover_fcmi",
    "recover_graph",
    "reduce_atom",
    "restrict_entropy",
    "ring_field_witness",
    "smallest_graph",
    "source_entropy",
    "star_xor_witness",
    "subfield_graph",
    "subtree_condition",
    "type_of_atom",
    "vanishing_atoms",
    "verify_reduction",
]
