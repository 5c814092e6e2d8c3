"""Atoms of the set-variable field, independency images, and their inverses.

An atom over variables 1..n intersects every set variable either plainly or
complemented; it is identified by the mask of complemented indices.  The one
atom with everything complemented is empty and excluded, so there are 2^n - 1
atoms.  Independency statements and graphs both project to sets of atoms
("images"); this module computes those images and recovers the originating
statement or graph from them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from ._bits import as_mask, iter_bits, verts_of
from .graphs import Graph

MAX_ATOM_VARS = 16  # full atom enumeration is O(2^n); cap it

BAR = chr(0x0304)  # combining macron, rendered over the preceding digit


class NotAnFcmiImage(ValueError):
    """Raised when an atom set is not the image of any independency."""


def _check_enum_cap(n: int):
    if not 1 <= n <= MAX_ATOM_VARS:
        raise ValueError(f"atom enumeration supports 1..{MAX_ATOM_VARS} variables, got {n}")


@dataclass(frozen=True, order=True)
class Atom:
    """One atom, identified by the mask of complemented variables.

    The complemented mask must leave at least one variable plain.
    """

    n: int
    complemented: int  # bitmask; bit i-1 set means variable i is complemented

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.n < 1:
            raise ValueError("atom needs at least one variable")
        if not 0 <= self.complemented < full:
            raise ValueError(
                f"complemented mask 0b{self.complemented:b} must be a proper subset of 1..{self.n}"
            )

    @classmethod
    def of(cls, n: int, complemented: Iterable[int]) -> "Atom":
        return cls(n, as_mask(complemented, n))

    @property
    def support_mask(self) -> int:
        """Mask of plain (non-complemented) variables; the atom lies inside each."""
        return ((1 << self.n) - 1) & ~self.complemented

    @property
    def support(self) -> frozenset[int]:
        return frozenset(verts_of(self.support_mask))

    @property
    def complemented_set(self) -> frozenset[int]:
        return frozenset(verts_of(self.complemented))

    @property
    def weight(self) -> int:
        return self.n - self.complemented.bit_count()

    def __str__(self):
        return " ".join(
            f"{i}{BAR}" if (self.complemented >> (i - 1)) & 1 else str(i)
            for i in range(1, self.n + 1)
        )

    def to_text(self) -> str:
        """ASCII rendering: complemented variables carry a trailing apostrophe."""
        return " ".join(
            f"{i}'" if (self.complemented >> (i - 1)) & 1 else str(i)
            for i in range(1, self.n + 1)
        )

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "Atom":
        """Parse "1 2' 3" (apostrophe) or the macron form produced by str()."""
        comp = []
        seen = []
        for tok in text.split():
            flagged = tok.endswith("'") or tok.endswith(BAR)
            digits = tok.rstrip("'" + BAR)
            if not digits.isdigit():
                raise ValueError(f"bad atom token {tok!r}")
            v = int(digits)
            seen.append(v)
            if flagged:
                comp.append(v)
        nn = n if n is not None else max(seen, default=0)
        if sorted(seen) != list(range(1, nn + 1)):
            raise ValueError(f"atom text {text!r} must list each variable 1..{nn} once")
        return cls.of(nn, comp)

    def to_json(self) -> dict:
        return {"n": self.n, "complemented": sorted(self.complemented_set)}

    @classmethod
    def from_json(cls, d: dict) -> "Atom":
        for key in ("n", "complemented"):
            if key not in d:
                raise ValueError(f"atom JSON missing field {key!r}")
        return cls.of(int(d["n"]), d["complemented"])


def all_atoms(n: int) -> Iterator[Atom]:
    """All 2^n - 1 atoms, in increasing complemented-mask order."""
    _check_enum_cap(n)
    for c in range((1 << n) - 1):
        yield Atom(n, c)


@dataclass(frozen=True)
class FCMI:
    """A conditional mutual independency (given; groups).

    The groups are mutually independent conditioned on the given set.  The
    statement is *full* when given + groups partition 1..n; partial statements
    (the union being a proper subset) are allowed and flagged by `is_full`.
    """

    n: int
    given: int  # mask of the conditioning set
    groups: tuple[int, ...]  # masks of the independent blocks

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.given & ~full:
            raise ValueError("conditioning set outside 1..n")
        if len(self.groups) < 2:
            raise ValueError("an independency needs at least two groups")
        seen = self.given
        for q in self.groups:
            if q == 0:
                raise ValueError("empty independency group")
            if q & ~full:
                raise ValueError("group outside 1..n")
            if q & seen:
                raise ValueError("given set and groups must be pairwise disjoint")
            seen |= q
        object.__setattr__(self, "groups", tuple(sorted(self.groups)))

    @classmethod
    def of(cls, n: int, given: Iterable[int], groups: Sequence[Iterable[int]]) -> "FCMI":
        return cls(n, as_mask(given, n), tuple(as_mask(q, n) for q in groups))

    @property
    def scope(self) -> int:
        """Mask of every variable mentioned by the statement."""
        m = self.given
        for q in self.groups:
            m |= q
        return m

    @property
    def is_full(self) -> bool:
        return self.scope == (1 << self.n) - 1

    @property
    def given_set(self) -> frozenset[int]:
        return frozenset(verts_of(self.given))

    @property
    def group_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(verts_of(q)) for q in self.groups)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "T": sorted(self.given_set),
            "Q": [sorted(s) for s in self.group_sets],
        }

    @classmethod
    def from_json(cls, d: dict) -> "FCMI":
        for key in ("n", "T", "Q"):
            if key not in d:
                raise ValueError(f"independency JSON missing field {key!r}")
        return cls.of(int(d["n"]), d["T"], d["Q"])


class AtomSet:
    """A set of atoms over a common n, stored as one big-int bitset.

    Bit c is set iff the atom whose complemented mask equals c is a member,
    giving O(1) membership and whole-set operations as integer arithmetic.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        _check_enum_cap(n)
        if bits >> ((1 << n) - 1):
            raise ValueError("bitset contains indices outside the atom range")
        self.n = n
        self.bits = bits

    @classmethod
    def of(cls, n: int, atoms: Iterable[Atom]) -> "AtomSet":
        bits = 0
        for a in atoms:
            if a.n != n:
                raise ValueError(f"atom over {a.n} variables in a set over {n}")
            bits |= 1 << a.complemented
        return cls(n, bits)

    @classmethod
    def from_masks(cls, n: int, cmasks: Iterable[int]) -> "AtomSet":
        bits = 0
        top = (1 << n) - 1
        for c in cmasks:
            if not 0 <= c < top:
                raise ValueError(f"complemented mask {c} out of range")
            bits |= 1 << c
        return cls(n, bits)

    def __contains__(self, a: Atom) -> bool:
        return a.n == self.n and (self.bits >> a.complemented) & 1 == 1

    def has_cmask(self, c: int) -> bool:
        return (self.bits >> c) & 1 == 1

    def __iter__(self) -> Iterator[Atom]:
        for b in iter_bits(self.bits):
            yield Atom(self.n, b.bit_length() - 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __eq__(self, other):
        return isinstance(other, AtomSet) and self.n == other.n and self.bits == other.bits

    def __hash__(self):
        return hash((self.n, self.bits))

    def _coerce(self, other: "AtomSet") -> int:
        if self.n != other.n:
            raise ValueError("atom sets over different variable counts")
        return other.bits

    def __or__(self, other):
        return AtomSet(self.n, self.bits | self._coerce(other))

    def __and__(self, other):
        return AtomSet(self.n, self.bits & self._coerce(other))

    def __sub__(self, other):
        return AtomSet(self.n, self.bits & ~self._coerce(other))

    def issubset(self, other: "AtomSet") -> bool:
        return self.bits & ~self._coerce(other) == 0

    def __repr__(self):
        return f"AtomSet(n={self.n}, atoms=[{', '.join(a.to_text() for a in self)}])"

    def to_json(self) -> dict:
        return {"n": self.n, "atoms": [sorted(a.complemented_set) for a in self]}

    @classmethod
    def from_json(cls, d: dict) -> "AtomSet":
        for key in ("n", "atoms"):
            if key not in d:
                raise ValueError(f"atom set JSON missing field {key!r}")
        n = int(d["n"])
        return cls.of(n, (Atom.of(n, comp) for comp in d["atoms"]))


class AtomType(Enum):
    TYPE_I = 1
    TYPE_II = 2


# -- images ----------------------------------------------------------------


def image_of_fcmi(k: FCMI) -> AtomSet:
    """Atoms that must vanish for a full independency to hold.

    An atom belongs to the image iff its plain variables avoid the given set
    and touch at least two of the groups.
    """
    if not k.is_full:
        raise ValueError("image_of_fcmi needs a full statement; use image_of_partial")
    _check_enum_cap(k.n)
    full = (1 << k.n) - 1
    bits = 0
    free = full & ~k.given
    # enumerate supports: submasks of the complement of the given set
    w = free
    while True:
        if sum(1 for q in k.groups if w & q) >= 2:
            bits |= 1 << (full & ~w)
        if w == 0:
            break
        w = (w - 1) & free
    return AtomSet(k.n, bits)


def image_of_fcmi_by_parts(k: FCMI) -> AtomSet:
    """Same image, generated part by part from the defining form.

    Enumerates every choice of per-group subsets with at least two nonempty
    and records the resulting atom.  Exponential in each group size; kept as
    the independent cross-check for image_of_fcmi.
    """
    if not k.is_full:
        raise ValueError("image_of_fcmi_by_parts needs a full statement")
    _check_enum_cap(k.n)
    full = (1 << k.n) - 1

    def submasks(q):
        s = q
        while True:
            yield s
            if s == 0:
                return
            s = (s - 1) & q

    bits = 0
    for choice in itertools.product(*(list(submasks(q)) for q in k.groups)):
        if sum(1 for w in choice if w) < 2:
            continue
        support = 0
        for w in choice:
            support |= w
        bits |= 1 << (full & ~support)
    return AtomSet(k.n, bits)


def image_of_partial(k: FCMI) -> list[AtomSet]:
    """Expand a partial independency into per-part atom sets.

    Each prescribed set (one per admissible choice of group subsets) is not an
    atom when the statement's scope misses variables; it expands to the atoms
    whose support is the chosen support extended by any subset of the missing
    variables.  For a full statement each part is the single prescribed atom.
    """
    _check_enum_cap(k.n)
    full = (1 << k.n) - 1
    outside = full & ~k.scope

    def submasks(q):
        s = q
        while True:
            yield s
            if s == 0:
                return
            s = (s - 1) & q

    parts = []
    for choice in itertools.product(*(list(submasks(q)) for q in k.groups)):
        if sum(1 for w in choice if w) < 2:
            continue
        base = 0
        for w in choice:
            base |= w
        bits = 0
        ext = outside
        while True:
            bits |= 1 << (full & ~(base | ext))
            if ext == 0:
                break
            ext = (ext - 1) & outside
        parts.append(AtomSet(k.n, bits))
    parts.sort(key=lambda s: s.bits)
    return parts


def recover_fcmi(img: AtomSet) -> FCMI:
    """Invert image_of_fcmi.

    The unique maximum-weight atom pins down the conditioning set; the groups
    are then the classes of the pair relation "the atom supported exactly by
    {l, l'} is absent from the image".  That relation must come out transitive
    and the reconstructed statement must reproduce the input image exactly,
    otherwise the input is not an image and NotAnFcmiImage is raised.
    """
    n = img.n
    full = (1 << n) - 1
    if len(img) == 0:
        raise NotAnFcmiImage("empty atom set")
    best_w = -1
    best = []
    for a in img:
        if a.weight > best_w:
            best_w, best = a.weight, [a]
        elif a.weight == best_w:
            best.append(a)
    if len(best) != 1:
        raise NotAnFcmiImage(f"no unique maximum-weight atom (found {len(best)})")
    given = best[0].complemented
    rest = verts_of(full & ~given)
    if len(rest) < 2:
        raise NotAnFcmiImage("fewer than two variables outside the conditioning set")

    # union-find over the pair relation
    parent = {v: v for v in rest}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    related = {}
    for l, lp in itertools.combinations(rest, 2):
        pair = (1 << (l - 1)) | (1 << (lp - 1))
        rel = not img.has_cmask(full & ~pair)
        related[(l, lp)] = rel
        if rel:
            parent[find(l)] = find(lp)

    groups: dict[int, int] = {}
    for v in rest:
        r = find(v)
        groups[r] = groups.get(r, 0) | 1 << (v - 1)
    # transitivity check: within one class every pair must be related
    for l, lp in itertools.combinations(rest, 2):
        if (find(l) == find(lp)) != related[(l, lp)]:
            raise NotAnFcmiImage(f"pair relation not transitive at ({l},{lp})")
    if len(groups) < 2:
        raise NotAnFcmiImage("relation merges everything into one group")

    k = FCMI(n, given, tuple(groups.values()))
    if image_of_fcmi(k) != img:
        raise NotAnFcmiImage("atom set is not the image of the reconstructed statement")
    return k


def type_of_atom(g: Graph, a: Atom) -> AtomType:
    """Type I when dropping the atom's complemented vertices leaves g connected."""
    if a.n != g.n:
        raise ValueError(f"atom over {a.n} variables against graph on {g.n}")
    if g.vmask != (1 << g.n) - 1:
        raise ValueError("atom typing needs a graph on the full universe 1..n")
    return AtomType.TYPE_I if g.component_count(a.complemented) == 1 else AtomType.TYPE_II


def image_of_graph(g: Graph) -> AtomSet:
    """All atoms whose complemented set is a cutset (the graph's image)."""
    if g.vmask != (1 << g.n) - 1:
        raise ValueError("image needs a graph on the full universe 1..n")
    _check_enum_cap(g.n)
    bits = 0
    for c in range((1 << g.n) - 1):
        if g.component_count(c) > 1:
            bits |= 1 << c
    return AtomSet(g.n, bits)


def recover_graph(img: AtomSet) -> Graph:
    """Start from the complete graph and drop every pair whose private atom is present.

    The private atom of a pair {u, v} is the one supported by exactly u and v.
    On a genuine graph image this inverts image_of_graph.
    """
    n = img.n
    full = (1 << n) - 1
    edges = []
    for u, v in itertools.combinations(range(1, n + 1), 2):
        pair = (1 << (u - 1)) | (1 << (v - 1))
        if not img.has_cmask(full & ~pair):
            edges.append((u, v))
    return Graph(n, edges)


def image_of_collection(pi: Iterable[FCMI]) -> AtomSet:
    """Union of the images of a collection of full independencies."""
    out: AtomSet | None = None
    for k in pi:
        im = image_of_fcmi(k)
        out = im if out is None else out | im
    if out is None:
        raise ValueError("empty independency collection")
    return out


def implies(pi1: Sequence[FCMI], pi2: Sequence[FCMI]) -> bool:
    """Whether every consequence of pi2 already follows from pi1 (image containment)."""
    return image_of_collection(pi2).issubset(image_of_collection(pi1))
