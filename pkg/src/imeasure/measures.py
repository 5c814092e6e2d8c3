"""Entropy vectors, the signed atom measure, and checks built on top of it.

The signed measure assigns a value to every atom so that every joint entropy
is recovered by summing the atoms inside the corresponding set union.  Both
directions are subset-lattice transforms over bitmask-indexed numpy arrays:

    measure(atom with complemented mask U) = - sum_{T >= U} (-1)^|T-U| h(T)
    h(B) = (sum over all atoms) - (sum over atoms with complemented mask >= B)

Tolerances: "vanishes" always means abs(value) <= tol, never a signed test.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from ._bits import as_mask, iter_bits, verts_of
from .atoms import Atom, AtomSet, AtomType, FCMI, image_of_fcmi, image_of_partial, type_of_atom
from .graphs import Graph, maximal_cliques

MAX_ENUM_VARS = 16  # full-lattice transforms are O(n 2^n) space/time
MAX_VARS = 24       # single-atom queries from a distribution
PROB_TOL = 1e-12
DEFAULT_TOL = 1e-9


class Distribution:
    """A sparse joint distribution of n finite variables.

    `probs` maps configurations (n-tuples of 0-based symbols) to probability;
    only the support is stored.  Probabilities must be nonnegative and sum to
    one within 1e-12.
    """

    __slots__ = ("n", "alphabets", "probs")

    def __init__(self, n: int, alphabets, probs: dict):
        if not 1 <= n <= MAX_VARS:
            raise ValueError(f"variable count {n} outside 1..{MAX_VARS}")
        alphabets = tuple(int(a) for a in alphabets)
        if len(alphabets) != n or any(a < 1 for a in alphabets):
            raise ValueError("alphabets must list one positive size per variable")
        total = 0.0
        clean = {}
        for x, p in probs.items():
            x = tuple(int(c) for c in x)
            if len(x) != n or any(not 0 <= c < a for c, a in zip(x, alphabets)):
                raise ValueError(f"configuration {x} outside the alphabets")
            if p < -PROB_TOL:
                raise ValueError(f"negative probability {p} at {x}")
            if p > 0:
                clean[x] = clean.get(x, 0.0) + float(p)
            total += p
        if abs(total - 1.0) > PROB_TOL:
            raise ValueError(f"probabilities sum to {total}, not 1")
        self.n = n
        self.alphabets = alphabets
        self.probs = clean

    def marginal(self, on) -> dict[tuple, float]:
        """Marginal distribution on a vertex set, iterating the support only."""
        m = as_mask(on, self.n)
        idx = [i for i in range(self.n) if (m >> i) & 1]
        out: dict[tuple, float] = {}
        for x, p in self.probs.items():
            key = tuple(x[i] for i in idx)
            out[key] = out.get(key, 0.0) + p
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alphabets": list(self.alphabets),
            "probs": [{"x": list(x), "p": p} for x, p in sorted(self.probs.items())],
        }

    @classmethod
    def from_json(cls, d: dict) -> "Distribution":
        for key in ("n", "alphabets", "probs"):
            if key not in d:
                raise ValueError(f"distribution JSON missing field {key!r}")
        probs = {}
        for row in d["probs"]:
            if "x" not in row or "p" not in row:
                raise ValueError("distribution JSON probs entries need fields 'x' and 'p'")
            probs[tuple(row["x"])] = float(row["p"])
        return cls(int(d["n"]), d["alphabets"], probs)


def _entropy_of_weights(weights, log_base: float) -> float:
    acc = 0.0
    for p in weights:
        if p > 0.0:
            acc -= p * math.log(p)
    return acc / log_base


def marginal_entropy(p: Distribution, on, base: float = 2.0) -> float:
    """Entropy of the marginal on a vertex set; empty set gives 0."""
    if base <= 1.0:
        raise ValueError("log base must exceed 1")
    m = as_mask(on, p.n)
    if m == 0:
        return 0.0
    return _entropy_of_weights(p.marginal(m).values(), math.log(base))


class EntropyVector:
    """Joint entropies of every nonempty subset, indexed by subset bitmask."""

    __slots__ = ("n", "base", "table")

    def __init__(self, n: int, base: float, table: np.ndarray):
        if not 1 <= n <= MAX_ENUM_VARS:
            raise ValueError(f"variable count {n} outside 1..{MAX_ENUM_VARS}")
        if base <= 1.0:
            raise ValueError("log base must exceed 1")
        if table.shape != (1 << n,):
            raise ValueError(f"entropy table must have 2^{n} entries")
        self.n = n
        self.base = float(base)
        self.table = table.astype(float)
        self.table[0] = 0.0

    def h(self, subset) -> float:
        m = as_mask(subset, self.n)
        return float(self.table[m])

    def __eq__(self, other):
        return (
            isinstance(other, EntropyVector)
            and self.n == other.n
            and self.base == other.base
            and np.array_equal(self.table, other.table)
        )

    def allclose(self, other: "EntropyVector", tol: float = DEFAULT_TOL) -> bool:
        return (
            self.n == other.n
            and abs(self.base - other.base) <= tol
            and bool(np.all(np.abs(self.table - other.table) <= tol))
        )

    def to_json(self) -> dict:
        h = {
            ",".join(map(str, verts_of(m))): float(self.table[m])
            for m in range(1, 1 << self.n)
        }
        return {"n": self.n, "base": self.base, "h": h}

    @classmethod
    def from_json(cls, d: dict) -> "EntropyVector":
        for key in ("n", "base", "h"):
            if key not in d:
                raise ValueError(f"entropy JSON missing field {key!r}")
        n = int(d["n"])
        table = np.zeros(1 << n)
        seen = 0
        for key, val in d["h"].items():
            m = as_mask([int(t) for t in key.split(",")], n)
            table[m] = float(val)
            seen += 1
        if seen != (1 << n) - 1:
            raise ValueError(f"entropy JSON field 'h' must cover all {(1 << n) - 1} subsets")
        return cls(n, float(d["base"]), table)


class IMeasureVector:
    """The signed measure on atoms, indexed by complemented-variable bitmask."""

    __slots__ = ("n", "base", "table")

    def __init__(self, n: int, base: float, table: np.ndarray):
        if not 1 <= n <= MAX_ENUM_VARS:
            raise ValueError(f"variable count {n} outside 1..{MAX_ENUM_VARS}")
        if table.shape != (1 << n,):
            raise ValueError(f"measure table must have 2^{n} entries")
        self.n = n
        self.base = float(base)
        self.table = table.astype(float)
        self.table[(1 << n) - 1] = 0.0  # the all-complemented atom is empty

    def value(self, a: Atom) -> float:
        if a.n != self.n:
            raise ValueError("atom over a different variable count")
        return float(self.table[a.complemented])

    def value_at(self, cmask: int) -> float:
        if not 0 <= cmask < (1 << self.n) - 1:
            raise ValueError(f"complemented mask {cmask} out of range")
        return float(self.table[cmask])

    def atoms(self):
        for c in range((1 << self.n) - 1):
            yield Atom(self.n, c), float(self.table[c])

    def to_json(self) -> dict:
        values = {a.to_text(): v + 0.0 if v != 0 else 0.0 for a, v in self.atoms()}
        return {"n": self.n, "base": self.base, "values": values}

    @classmethod
    def from_json(cls, d: dict) -> "IMeasureVector":
        for key in ("n", "base", "values"):
            if key not in d:
                raise ValueError(f"measure JSON missing field {key!r}")
        n = int(d["n"])
        table = np.zeros(1 << n)
        for text, val in d["values"].items():
            a = Atom.from_text(text, n)
            table[a.complemented] = float(val)
        return cls(n, float(d["base"]), table)


# -- lattice transforms ------------------------------------------------------


def _signed_superset_transform(values: np.ndarray, n: int) -> np.ndarray:
    """out[U] = sum over supersets T of U of (-1)^|T-U| values[T]."""
    out = values.copy()
    idx = np.arange(1 << n)
    for b in range(n):
        bit = 1 << b
        lo = idx[(idx & bit) == 0]
        out[lo] -= out[lo | bit]
    return out


def _superset_sums(values: np.ndarray, n: int) -> np.ndarray:
    """out[U] = sum over supersets T of U of values[T]."""
    out = values.copy()
    idx = np.arange(1 << n)
    for b in range(n):
        bit = 1 << b
        lo = idx[(idx & bit) == 0]
        out[lo] += out[lo | bit]
    return out


def entropy_vector(p: Distribution, base: float = 2.0) -> EntropyVector:
    """All 2^n - 1 marginal entropies of a distribution."""
    if p.n > MAX_ENUM_VARS:
        raise ValueError(f"full entropy vector supports up to {MAX_ENUM_VARS} variables")
    if base <= 1.0:
        raise ValueError("log base must exceed 1")
    lb = math.log(base)
    table = np.zeros(1 << p.n)
    for m in range(1, 1 << p.n):
        table[m] = _entropy_of_weights(p.marginal(m).values(), lb)
    return EntropyVector(p.n, base, table)


def mu_from_entropy(h: EntropyVector) -> IMeasureVector:
    """The unique signed atom measure consistent with an entropy vector."""
    table = -_signed_superset_transform(h.table, h.n)
    return IMeasureVector(h.n, h.base, table)


def entropy_from_mu(mu: IMeasureVector) -> EntropyVector:
    """Rebuild joint entropies by summing atoms inside each set union."""
    z = _superset_sums(mu.table, mu.n)
    table = mu.table.sum() - z
    table[0] = 0.0
    return EntropyVector(mu.n, mu.base, table)


def measure_from_distribution(p: Distribution, base: float = 2.0) -> IMeasureVector:
    """Shortcut: entropy vector then atom measure."""
    return mu_from_entropy(entropy_vector(p, base))


def atom_measure_from_distribution(p: Distribution, a: Atom, base: float = 2.0) -> float:
    """Single atom value straight from the distribution.

    Alternating sum of 2^weight marginal entropies; avoids building the full
    table, so it works beyond the full-enumeration cap.
    """
    if a.n != p.n:
        raise ValueError("atom over a different variable count")
    comp = a.complemented
    support = a.support_mask
    acc = -marginal_entropy(p, comp, base) if comp else 0.0
    sub = support
    while sub:
        sign = -1.0 if sub.bit_count() % 2 == 0 else 1.0
        acc += sign * marginal_entropy(p, sub | comp, base)
        sub = (sub - 1) & support
    return acc


# -- expressions over the measure --------------------------------------------


def measure_of_groups(mu: IMeasureVector, groups, minus=()) -> float:
    """Measure of (union over each group, intersected across groups) minus a set.

    Sums the atoms whose support touches every group and avoids the subtracted
    set; with singleton groups this evaluates plain intersections.
    """
    n = mu.n
    gmasks = [as_mask(g, n) for g in groups]
    if not gmasks or any(g == 0 for g in gmasks):
        raise ValueError("need at least one nonempty group")
    mmask = as_mask(minus, n)
    for g in gmasks:
        if g & mmask:
            raise ValueError("groups and the subtracted set must be disjoint")
    full = (1 << n) - 1
    acc = 0.0
    for c in range(full):
        support = full & ~c
        if support & mmask:
            continue
        if all(support & g for g in gmasks):
            acc += mu.table[c]
    return float(acc)


def measure_of_expression(mu: IMeasureVector, caps, minus=()) -> float:
    """Measure of the intersection of single set variables minus a set."""
    cmask = as_mask(caps, mu.n)
    return measure_of_groups(mu, [1 << (b.bit_length() - 1) for b in iter_bits(cmask)], minus)


# -- checks -------------------------------------------------------------------


def fcmi_holds(k: FCMI, mu: IMeasureVector, tol: float = DEFAULT_TOL) -> bool:
    """Whether an independency holds under a measure.

    Full statements require every image atom to vanish; partial statements
    require each expanded part to sum to zero within tolerance.
    """
    if k.n != mu.n:
        raise ValueError("statement and measure disagree on the variable count")
    if k.is_full:
        return all(abs(mu.table[a.complemented]) <= tol for a in image_of_fcmi(k))
    for part in image_of_partial(k):
        total = sum(mu.table[a.complemented] for a in part)
        if abs(total) > tol:
            return False
    return True


@dataclass(frozen=True)
class MrfCheck:
    ok: bool
    violations: tuple[tuple[Atom, float], ...]  # cutset atoms where the measure is nonzero


def check_mrf(mu: IMeasureVector, g: Graph, tol: float = DEFAULT_TOL) -> MrfCheck:
    """Whether the measure vanishes on every atom whose complemented set cuts g."""
    if mu.n != g.n:
        raise ValueError("measure and graph disagree on the variable count")
    if g.vmask != (1 << g.n) - 1:
        raise ValueError("field checks need a graph on the full universe; relabel first")
    bad = []
    for c in range((1 << g.n) - 1):
        if g.component_count(c) > 1 and abs(mu.table[c]) > tol:
            bad.append((Atom(g.n, c), float(mu.table[c])))
    return MrfCheck(not bad, tuple(bad))


def vanishing_atoms(mu: IMeasureVector, tol: float = DEFAULT_TOL) -> AtomSet:
    """Atoms where the measure is zero within tolerance."""
    bits = 0
    for c in range((1 << mu.n) - 1):
        if abs(mu.table[c]) <= tol:
            bits |= 1 << c
    return AtomSet(mu.n, bits)


@dataclass(frozen=True)
class NonnegativityReport:
    nonneg: bool
    negative_atoms: tuple[tuple[Atom, float], ...]


def nonnegativity_report(mu: IMeasureVector, tol: float = DEFAULT_TOL) -> NonnegativityReport:
    """List the atoms where the measure dips below -tol."""
    neg = [
        (Atom(mu.n, c), float(mu.table[c]))
        for c in range((1 << mu.n) - 1)
        if mu.table[c] < -tol
    ]
    return NonnegativityReport(not neg, tuple(neg))


# -- atom reduction ------------------------------------------------------------


@dataclass(frozen=True)
class Reduction:
    """Result of shrinking a connected atom's support to its essential core.

    `kept` is the set of vertices whose individual removal (on top of the
    atom's complemented set) leaves the graph connected; the atom's value
    equals the measure of the intersection over `kept` minus the complemented
    set whenever the distribution respects the graph.
    """

    atom: Atom
    kept: frozenset[int]

    @property
    def kept_mask(self) -> int:
        return as_mask(self.kept)


def reduce_atom(g: Graph, a: Atom) -> Reduction:
    """Compute the reduction core of a connected (Type I) atom.

    Requires at least two plain variables; rejects atoms whose complemented
    set already cuts the graph.
    """
    if a.n != g.n:
        raise ValueError("atom over a different variable count")
    if type_of_atom(g, a) is not AtomType.TYPE_I:
        raise ValueError("reduction applies to Type I atoms only")
    if a.weight < 2:
        raise ValueError("reduction needs at least two plain variables")
    kept = [
        k
        for k in verts_of(a.support_mask)
        if g.component_count(a.complemented | 1 << (k - 1)) == 1
    ]
    return Reduction(a, frozenset(kept))


def verify_reduction(g: Graph, a: Atom, mu: IMeasureVector, tol: float = 1e-6) -> bool:
    """Check the reduction identity for one atom under a concrete measure."""
    red = reduce_atom(g, a)
    lhs = mu.value(a)
    rhs = measure_of_expression(mu, red.kept_mask, a.complemented)
    return abs(lhs - rhs) <= tol


# -- chain inequalities ---------------------------------------------------------


@dataclass(frozen=True)
class ChainInequalityCheck:
    valid: bool
    violating_atom: Atom | None
    witness: "Distribution | None"  # concentrates the measure on the violating atom


def chain_inequality_valid(coeffs: dict[Atom, float]) -> ChainInequalityCheck:
    """Decide whether a linear form over connected chain atoms is always nonnegative.

    Chain fields have nonnegative measure on every connected atom, so
    nonnegative coefficients suffice; and any one negative coefficient is
    refuted by the chain field that loads all the measure onto that atom.
    The witness distribution realizes the refutation on failure.
    """
    if not coeffs:
        return ChainInequalityCheck(True, None, None)
    ns = {a.n for a in coeffs}
    if len(ns) > 1:
        raise ValueError("coefficient atoms disagree on the variable count")
    n = ns.pop()
    chain = Graph.path(n)
    for a in coeffs:
        if type_of_atom(chain, a) is not AtomType.TYPE_I:
            raise ValueError(f"atom {a.to_text()} is not a connected atom of the chain")
    bad = [a for a in sorted(coeffs) if coeffs[a] < 0]
    if not bad:
        return ChainInequalityCheck(True, None, None)
    worst = bad[0]
    from .witnesses import atom_concentrator

    return ChainInequalityCheck(False, worst, atom_concentrator(n, worst.support_mask))


# -- random models ---------------------------------------------------------------


def generate_mrf(g: Graph, seed: int, alphabet: int = 2) -> Distribution:
    """A strictly positive random field respecting a graph.

    Draws one positive potential table per maximal clique and normalizes the
    product over the full configuration space, which satisfies every cutset
    independency of the graph exactly.
    """
    if alphabet < 2:
        raise ValueError("alphabet size must be at least 2")
    if alphabet ** g.n > 1 << 20:
        raise ValueError("configuration space too large for dense generation")
    if g.vmask != (1 << g.n) - 1:
        raise ValueError("random field generation needs a graph on the full universe")
    rng = np.random.default_rng(seed)
    cliques = maximal_cliques(g)
    tables = []
    for cmask in cliques:
        idx = [i for i in range(g.n) if (cmask >> i) & 1]
        tables.append((idx, rng.uniform(0.2, 1.0, size=alphabet ** len(idx))))
    probs = {}
    for x in itertools.product(range(alphabet), repeat=g.n):
        w = 1.0
        for idx, tab in tables:
            key = 0
            for i in idx:
                key = key * alphabet + x[i]
            w *= tab[key]
        probs[x] = w
    total = sum(probs.values())
    probs = {x: w / total for x, w in probs.items()}
    return Distribution(g.n, (alphabet,) * g.n, probs)


# -- subfield restriction ----------------------------------------------------------


def restrict_entropy(h: EntropyVector, keep) -> EntropyVector:
    """Entropy vector of a sub-collection, relabeled to 1..k in ascending order."""
    kmask = as_mask(keep, h.n)
    kept = verts_of(kmask)
    k = len(kept)
    if k == 0:
        raise ValueError("cannot restrict to an empty collection")
    table = np.zeros(1 << k)
    for m in range(1, 1 << k):
        orig = 0
        for i in range(k):
            if (m >> i) & 1:
                orig |= 1 << (kept[i] - 1)
        table[m] = h.table[orig]
    return EntropyVector(k, h.base, table)


def prefix_relabel(keep) -> dict[int, int]:
    """Mapping of a vertex subset onto 1..k in ascending order."""
    kept = verts_of(keep) if isinstance(keep, int) else sorted(set(keep))
    return {v: i + 1 for i, v in enumerate(kept)}
