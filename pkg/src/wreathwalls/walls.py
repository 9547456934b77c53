"""Cayley-tree walls on free groups, plus the abstract wall-structure contract.

A wall on a set is a partition into two half-spaces. The concrete walls used
here are the edges of the Cayley tree of F_n: cutting the edge between a
nonempty reduced word ``p`` and its parent splits the group into the cone of
words extending ``p`` and everything else. One wall per tree edge, keyed by
the deep endpoint, and the resulting wall distance is the word metric.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum

from .groups import DEFAULT_CAP, ReducedWord, free_ball


class Side(Enum):
    """Which half of a tree wall: the cone of the deep endpoint, or the rest."""

    CONE = "CONE"
    COCONE = "COCONE"

    @property
    def flipped(self) -> "Side":
        return Side.COCONE if self is Side.CONE else Side.CONE


@dataclass(frozen=True)
class TreeWall:
    """The wall cut by the tree edge joining ``deep`` to its parent word."""

    deep: ReducedWord

    def __post_init__(self) -> None:
        if self.deep.is_identity:
            raise ValueError("a tree wall needs a nonempty deep endpoint")

    @property
    def shallow(self) -> ReducedWord:
        return self.deep.parent()

    def sort_key(self) -> tuple:
        return self.deep.sort_key()

    def __str__(self) -> str:
        return f"wall({self.deep})"


_SIDE_ORDER = {Side.CONE: 0, Side.COCONE: 1}


@dataclass(frozen=True)
class TreeHalfSpace:
    """One of the two classes of a tree wall.

    CONE is the set of words with the wall's deep endpoint as a prefix;
    COCONE is its complement. The two sides partition F_n.
    """

    wall: TreeWall
    side: Side

    def contains(self, word: ReducedWord) -> bool:
        on_cone_side = word.starts_with(self.wall.deep)
        return on_cone_side if self.side is Side.CONE else not on_cone_side

    def complement(self) -> "TreeHalfSpace":
        return TreeHalfSpace(self.wall, self.side.flipped)

    def sort_key(self) -> tuple:
        return (self.wall.sort_key(), _SIDE_ORDER[self.side])

    def __str__(self) -> str:
        return f"{self.side.value}({self.wall.deep})"


def separating_tree_walls(x: ReducedWord, y: ReducedWord) -> tuple[TreeWall, ...]:
    """The walls separating x from y: the edges of the tree geodesic between them.

    There are exactly ``len(x.inverse() * y)`` of them. Returned sorted by
    deep endpoint.
    """
    if x.rank != y.rank:
        raise ValueError(f"rank mismatch: {x.rank} vs {y.rank}")
    common = 0
    for a, b in zip(x.letters, y.letters):
        if a != b:
            break
        common += 1
    walls = [TreeWall(x.prefix(i)) for i in range(common + 1, len(x.letters) + 1)]
    walls.extend(TreeWall(y.prefix(j)) for j in range(common + 1, len(y.letters) + 1))
    walls.sort(key=TreeWall.sort_key)
    return tuple(walls)


def side_containing(wall: TreeWall, word: ReducedWord) -> TreeHalfSpace:
    """The half-space of ``wall`` that contains ``word``."""
    side = Side.CONE if word.starts_with(wall.deep) else Side.COCONE
    return TreeHalfSpace(wall, side)


def translate_half_space(g: ReducedWord, half: TreeHalfSpace) -> TreeHalfSpace:
    """The image of a half-space under left multiplication by g, canonicalized.

    The image edge joins g*deep and g*parent; whichever image word is longer
    becomes the new deep endpoint, and the side is chosen so that membership
    is equivariant: the result contains g*x exactly when ``half`` contains x.
    """
    deep_image = g * half.wall.deep
    shallow_image = g * half.wall.shallow
    assert abs(len(deep_image) - len(shallow_image)) == 1
    if len(deep_image) > len(shallow_image):
        new_wall, cone_holds_image = TreeWall(deep_image), True
    else:
        new_wall, cone_holds_image = TreeWall(shallow_image), False
    # The image of the CONE side is the component containing g*deep.
    side_of_image = Side.CONE if cone_holds_image else Side.COCONE
    side = side_of_image if half.side is Side.CONE else side_of_image.flipped
    return TreeHalfSpace(new_wall, side)


class WallStructure(ABC):
    """Left-invariant wall structure on a group, as the wreath construction uses it.

    Implementations supply a proper wall family on their base group: every
    pair of elements is separated by finitely many walls, and the group acts
    on its own half-spaces. Half-space objects must answer ``contains`` and
    ``complement`` and hash by canonical identity.

    The shipped family (tree edges of F_n) assigns distinct walls to distinct
    edges. An implementation whose wall family repeats a partition must
    return the repeats from :meth:`separating_walls` so they are counted
    with multiplicity in the wall distance.
    """

    @abstractmethod
    def identity_element(self) -> ReducedWord:
        """The base point the metric balls are centered on."""

    @abstractmethod
    def metric_ball(self, radius: int, cap: int = DEFAULT_CAP) -> list[ReducedWord]:
        """All elements at wall distance <= radius from the identity."""

    @abstractmethod
    def separating_walls(self, x: ReducedWord, y: ReducedWord) -> tuple[TreeWall, ...]:
        """The finitely many walls with x and y on opposite sides."""

    @abstractmethod
    def side_containing(self, wall: TreeWall, x: ReducedWord) -> TreeHalfSpace:
        """The half-space of ``wall`` containing x."""

    @abstractmethod
    def translate(self, g: ReducedWord, half: TreeHalfSpace) -> TreeHalfSpace:
        """The canonical form of the half-space g * half."""

    def wall_distance(self, x: ReducedWord, y: ReducedWord) -> int:
        return len(self.separating_walls(x, y))


class TreeWallStructure(WallStructure):
    """The Cayley-tree wall structure on F_rank; wall distance = word metric."""

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError(f"rank must be >= 1, got {rank}")
        self.rank = rank

    def identity_element(self) -> ReducedWord:
        return ReducedWord.identity(self.rank)

    def metric_ball(self, radius: int, cap: int = DEFAULT_CAP) -> list[ReducedWord]:
        return free_ball(self.rank, radius, cap)

    def separating_walls(self, x: ReducedWord, y: ReducedWord) -> tuple[TreeWall, ...]:
        return separating_tree_walls(x, y)

    def side_containing(self, wall: TreeWall, x: ReducedWord) -> TreeHalfSpace:
        return side_containing(wall, x)

    def translate(self, g: ReducedWord, half: TreeHalfSpace) -> TreeHalfSpace:
        return translate_half_space(g, half)

    def __repr__(self) -> str:
        return f"TreeWallStructure(rank={self.rank})"
