"""Finite-scale certification that the wall metric embeds into Hilbert space.

Walls give squared-distance-isometric coordinates for free: index one 0/1
coordinate per wall, set it to membership in the wall's positive half, and
the Hamming distance between coordinate rows equals the wall distance
exactly. Consequently every wall distance matrix is conditionally negative
definite, which is the finite-sample shadow of a proper isometric action on
a Hilbert space. This module computes the coordinates, checks the isometry,
tests conditional negative definiteness by eigenvalue, and tabulates how the
wall distance grows along word-metric spheres of the wreath product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import CapExceededError, LampConfig, ReducedWord, WreathElement
from .wreath_walls import WreathWall, WreathWallSpace


def validate_sample(elements: list[WreathElement]) -> None:
    """Reject empty samples and duplicate elements."""
    if not elements:
        raise ValueError("sample must contain at least one element")
    seen: set[WreathElement] = set()
    for element in elements:
        if element in seen:
            raise ValueError(f"duplicate sample element {element}")
        seen.add(element)


def distance_matrix(space: WreathWallSpace, elements: list[WreathElement]) -> np.ndarray:
    """Matrix of pairwise wall distances; symmetric with zero diagonal."""
    validate_sample(elements)
    n = len(elements)
    matrix = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            d = space.wall_distance(elements[i], elements[j])
            matrix[i, j] = d
            matrix[j, i] = d
    validate_distance_matrix(matrix)
    return matrix


def validate_distance_matrix(matrix: np.ndarray) -> None:
    """Check square shape, symmetry, zero diagonal, nonnegativity, triangle inequality."""
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"distance matrix must be square, got shape {matrix.shape}")
    if not np.array_equal(matrix, matrix.T):
        raise ValueError("distance matrix is not symmetric")
    if np.any(np.diag(matrix) != 0):
        raise ValueError("distance matrix has nonzero diagonal entries")
    if np.any(matrix < 0):
        raise ValueError("distance matrix has negative entries")
    for k in range(matrix.shape[0]):
        if np.any(matrix > matrix[:, k : k + 1] + matrix[k : k + 1, :]):
            raise ValueError(f"triangle inequality fails through index {k}")


def wall_coordinates(
    space: WreathWallSpace, elements: list[WreathElement]
) -> tuple[list[WreathWall], np.ndarray]:
    """0/1 wall coordinates realizing the wall distance as Hamming distance.

    Collects every wall separating some pair of sample elements (canonical
    order) and marks membership of each element in each wall's positive
    half. Rows of the returned matrix differ in exactly ``wall_distance``
    coordinates: walls separating the pair flip, all others agree.
    """
    validate_sample(elements)
    walls: set[WreathWall] = set()
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            walls.update(space.directed_separating_walls(elements[i], elements[j]))
            walls.update(space.directed_separating_walls(elements[j], elements[i]))
    ordered = sorted(walls, key=WreathWall.sort_key)
    matrix = np.zeros((len(elements), len(ordered)), dtype=np.int64)
    for i, element in enumerate(elements):
        for k, wall in enumerate(ordered):
            if wall.positive.contains(element):
                matrix[i, k] = 1
    return ordered, matrix


@dataclass(frozen=True)
class CndReport:
    """Result of the conditional-negative-definiteness eigenvalue test."""

    passed: bool
    min_eigenvalue: float
    dimension: int
    tolerance: float


def cnd_check(matrix: np.ndarray, tol: float = 1e-9) -> CndReport:
    """Test that a symmetric kernel is conditionally negative definite.

    The kernel K passes when sum_ij c_i c_j K_ij <= 0 for every zero-sum
    vector c, equivalently when -1/2 P K P is positive semidefinite for P
    the centering projection. The eigenvalue threshold is ``tol`` scaled by
    the matrix max-norm, so integer kernels of moderate size are judged
    essentially exactly.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"kernel matrix must be square, got shape {matrix.shape}")
    if not np.array_equal(matrix, matrix.T):
        raise ValueError("kernel matrix is not symmetric")
    if np.any(matrix < 0):
        raise ValueError("kernel matrix has negative entries")
    n = matrix.shape[0]
    centering = np.eye(n) - np.full((n, n), 1.0 / n)
    centered = -0.5 * (centering @ matrix @ centering)
    min_eigenvalue = float(np.linalg.eigvalsh(centered)[0])
    threshold = tol * max(1.0, float(matrix.max(initial=0.0)))
    return CndReport(
        passed=min_eigenvalue >= -threshold,
        min_eigenvalue=min_eigenvalue,
        dimension=n,
        tolerance=tol,
    )


@dataclass(frozen=True)
class GrowthRow:
    """Wall-distance statistics over one word-metric sphere."""

    radius: int
    sphere_size: int
    min_wall: int
    max_wall: int


def _standard_generators(space: WreathWallSpace) -> list[WreathElement]:
    """Tree generators and their inverses, plus one lamp move per nontrivial value."""
    identity_word = ReducedWord.identity(space.rank)
    empty = LampConfig.empty(space.lamps, space.rank)
    moves = []
    for index in range(1, space.rank + 1):
        for letter in (index, -index):
            moves.append(WreathElement(empty, ReducedWord((letter,), space.rank)))
    for value in space.lamps.nontrivial_elements():
        config = LampConfig.from_pairs([(identity_word, value)], space.lamps, space.rank)
        moves.append(WreathElement(config, identity_word))
    return moves


def growth_table(space: WreathWallSpace, radius: int) -> list[GrowthRow]:
    """Min/max wall distance to the identity on each word-metric sphere.

    Spheres are taken in the word metric of the wreath product over the
    standard generators (tree generators plus lamp moves at the identity),
    built by breadth-first search. Properness shows up as the minimum
    climbing without bound as the radius grows.
    """
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    generators = _standard_generators(space)
    identity = space.identity()
    spheres: list[list[WreathElement]] = [[identity]]
    visited: set[WreathElement] = {identity}
    for _ in range(radius):
        frontier: list[WreathElement] = []
        for element in spheres[-1]:
            for move in generators:
                neighbor = element * move
                if neighbor not in visited:
                    visited.add(neighbor)
                    frontier.append(neighbor)
            if len(visited) > space.cap:
                raise CapExceededError(len(visited), space.cap, "growth enumeration")
        spheres.append(frontier)
    rows = []
    for r, sphere in enumerate(spheres):
        distances = [space.wall_distance(identity, element) for element in sphere]
        rows.append(
            GrowthRow(
                radius=r,
                sphere_size=len(sphere),
                min_wall=min(distances),
                max_wall=max(distances),
            )
        )
    return rows
