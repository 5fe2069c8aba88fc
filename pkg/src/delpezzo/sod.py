"""Semiorthogonal decompositions, their nodes, and a store of Hom-vanishing
facts with provenance.

A decomposition is an ordered list of nodes; validity relative to a fact
store means Vanish(node_j -> node_i) for every pair with j > i, where
Vanish(x, y) asserts that all graded Horns from x to y vanish.  Facts only
ever enter through four channels: axioms, recording a decomposition that is
already known to be valid, the pushforward vanishing oracle of the mutation
engine, and twist closure (Vanish(x, y) implies Vanish(x(t), y(t)) for a
common line-bundle twist t).  No Ext group is ever computed from sheaf data.

Twist closure is built into the fact keys: a pair of twistable nodes is
stored by the difference of their classes, which is exactly the invariant
of a common twist.  Facts with an opaque member only match on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownBasis
from .intersection import BASIS_HE, DivisorClass, class_text, rewrite

# provenance tags for fact-store entries
AXIOM = "axiom"
RECORDED = "recorded-from-decomposition"
PUSHFORWARD = "pushforward-oracle"
TWIST_CLOSURE = "twist-closure"


@dataclass(frozen=True)
class KProfile:
    """Ranks of K_0 (or None when unknown) and K_{-1} of a component."""

    k0_rank: int | None
    k_minus1_rank: int


LINE_BUNDLE_PROFILE = KProfile(1, 0)


@dataclass(frozen=True)
class LineBundle:
    divisor: DivisorClass


@dataclass(frozen=True)
class TwistedStructureSheaf:
    """Structure sheaf of an exceptional divisor (E or D), twisted by an
    ambient divisor class."""

    support: str
    twist: DivisorClass

    def __post_init__(self):
        if self.support not in ("E", "D"):
            raise ValueError(f"support must be 'E' or 'D', got {self.support!r}")


@dataclass(frozen=True, eq=False)
class Opaque:
    """An admissible subcategory tracked up to abstract equivalence.

    Equality is by name only; the embedding tag is a provenance trail and
    never takes part in comparisons.
    """

    name: str
    perfect: bool | None = None
    k_profile: KProfile | None = None
    algebra: str | None = None
    embedding_tag: str = ""

    def __eq__(self, other):
        return isinstance(other, Opaque) and self.name == other.name

    def __hash__(self):
        return hash(("Opaque", self.name))

    def with_tag(self, note: str) -> "Opaque":
        tag = f"{self.embedding_tag}|{note}" if self.embedding_tag else note
        return Opaque(self.name, self.perfect, self.k_profile, self.algebra, tag)


SodNode = LineBundle | TwistedStructureSheaf | Opaque

# Declared perfectness of the opaque categories the shipped replays use.
# The quadric and rational-curve residual components are generated by
# perfect objects; for the del Pezzo residual component and the full
# derived categories of the singular spaces no flag is claimed.
_STANDARD_OPAQUE: dict[str, bool | None] = {
    "A_C": True,
    "A_Q": True,
    "A_V4": None,
    "A_V5": None,
    "A_V6": None,
    "DbC": None,
    "DbY": None,
}

DISPLAY_NAMES = {"DbC": "Db(C)", "DbY": "Db(Y)"}


def standard_opaque(name: str) -> Opaque:
    return Opaque(name, perfect=_STANDARD_OPAQUE.get(name))


def is_perfect(node: SodNode) -> bool | None:
    """Perfectness flag; line bundles and twisted structure sheaves are
    always perfect, opaque nodes carry a declared flag (None = unknown)."""
    if isinstance(node, Opaque):
        return node.perfect
    return True


def tensor(node: SodNode, cls: DivisorClass, note: str = "") -> SodNode:
    """Tensor a node by a line bundle class; opaque nodes only gain a tag."""
    if isinstance(node, LineBundle):
        return LineBundle(node.divisor + cls)
    if isinstance(node, TwistedStructureSheaf):
        return TwistedStructureSheaf(node.support, node.twist + cls)
    return node.with_tag(note or f"tensor({class_text(cls)})")


@dataclass(frozen=True)
class Decomposition:
    """Ordered semiorthogonal decomposition of the derived category of an
    ambient space; node order is semantically significant."""

    ambient: str
    nodes: tuple[SodNode, ...]


def node_text(node: SodNode, basis: str = BASIS_HE, d: int | None = None) -> str:
    """Parseable literal for a node, optionally rendered in the {h, D} basis."""

    def cls_text(c: DivisorClass) -> str:
        if basis != c.basis_id:
            if d is None:
                raise UnknownBasis("rendering in another basis needs the degree")
            c = rewrite(c, basis, d)
        return class_text(c)

    if isinstance(node, LineBundle):
        return f"O({cls_text(node.divisor)})"
    if isinstance(node, TwistedStructureSheaf):
        return f"O_{node.support}({cls_text(node.twist)})"
    return f"CAT({node.name})"


def decomposition_text(dec: Decomposition, basis: str = BASIS_HE,
                       d: int | None = None) -> str:
    return "<" + ", ".join(node_text(n, basis, d) for n in dec.nodes) + ">"


def _node_key(node: SodNode):
    if isinstance(node, LineBundle):
        return ("O", node.divisor.basis_id, node.divisor.coords)
    if isinstance(node, TwistedStructureSheaf):
        return ("O_" + node.support, node.twist.basis_id, node.twist.coords)
    return ("CAT", node.name)


def _twistable(node: SodNode) -> bool:
    return not isinstance(node, Opaque)


def _node_class(node: SodNode) -> DivisorClass:
    return node.divisor if isinstance(node, LineBundle) else node.twist


def _kind(node: SodNode) -> str:
    return "O" if isinstance(node, LineBundle) else "O_" + node.support


def vanish_key(x: SodNode, y: SodNode):
    """Canonical key of the fact Vanish(x, y).

    For a pair of twistable nodes the key depends only on the class
    difference, which makes twist closure automatic, involutive and
    additive under composed twists.  Pairs involving an opaque node match
    exactly by name.
    """
    if _twistable(x) and _twistable(y):
        diff = _node_class(y) - _node_class(x)
        return ("tw", _kind(x), _kind(y), diff.basis_id, diff.coords)
    return ("exact", _node_key(x), _node_key(y))


@dataclass
class _Fact:
    x_text: str
    y_text: str
    provenance: str


class FactStore:
    """Append-only database of Vanish facts with provenance."""

    def __init__(self):
        self._by_key: dict[object, _Fact] = {}

    def __len__(self) -> int:
        return len(self._by_key)

    def add(self, x: SodNode, y: SodNode, provenance: str) -> bool:
        """Record Vanish(x, y); returns False if already derivable."""
        key = vanish_key(x, y)
        if key in self._by_key:
            return False
        self._by_key[key] = _Fact(node_text(x), node_text(y), provenance)
        return True

    def has(self, x: SodNode, y: SodNode) -> bool:
        return vanish_key(x, y) in self._by_key

    def describe(self, x: SodNode, y: SodNode) -> str | None:
        """Evidence string for Vanish(x, y), noting twist closure when the
        match is through a common twist of a stored fact."""
        fact = self._by_key.get(vanish_key(x, y))
        if fact is None:
            return None
        base = f"Vanish({fact.x_text} -> {fact.y_text}) [{fact.provenance}]"
        if _twistable(x) and fact.x_text != node_text(x):
            return base + f" ({TWIST_CLOSURE} at {node_text(x)} -> {node_text(y)})"
        return base

    def dump(self) -> list[str]:
        lines = [f"vanish {f.x_text} -> {f.y_text}  [{f.provenance}]"
                 for f in self._by_key.values()]
        return sorted(lines)


def record_decomposition(dec: Decomposition, store: FactStore,
                         provenance: str = AXIOM) -> list[str]:
    """Add all pairwise Vanish(node_j, node_i) facts, j > i.

    Recording the same decomposition twice leaves the store unchanged.
    Returns descriptions of the newly added facts.
    """
    added = []
    nodes = dec.nodes
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if store.add(nodes[j], nodes[i], provenance):
                added.append(f"Vanish({node_text(nodes[j])} -> "
                             f"{node_text(nodes[i])}) [{provenance}]")
    return added


def query_complete_orthogonality(store: FactStore, a: SodNode, b: SodNode) -> bool:
    """True iff both Vanish(a, b) and Vanish(b, a) are derivable, twist
    closure included."""
    return store.has(a, b) and store.has(b, a)


def missing_pairs(dec: Decomposition, store: FactStore) -> list[tuple[int, int]]:
    """Ordered pairs (i, j), j > i, whose Vanish fact is not derivable."""
    out = []
    for i in range(len(dec.nodes)):
        for j in range(i + 1, len(dec.nodes)):
            if not store.has(dec.nodes[j], dec.nodes[i]):
                out.append((i + 1, j + 1))
    return out


def validate(dec: Decomposition, store: FactStore) -> bool:
    """A decomposition is valid for a store when every backwards Hom space
    is known to vanish."""
    return not missing_pairs(dec, store)
