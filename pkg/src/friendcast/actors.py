"""Actors, personalities, popularity, directed trust, and the utility function."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .knowledge import DRIFT_TOLERANCE, KnowledgeBase, average_knowledge, clamped_array

PERSONALITY_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Personality:
    """Convex weights on knowledge, reputation, and popularity in the utility."""

    knowledge: float
    reputation: float
    popularity: float

    def __post_init__(self):
        for name, w in (
            ("knowledge", self.knowledge),
            ("reputation", self.reputation),
            ("popularity", self.popularity),
        ):
            if not 0.0 <= w <= 1.0:
                raise ValueError(f"personality weight {name}={w!r} outside [0, 1]")
        total = self.knowledge + self.reputation + self.popularity
        if abs(total - 1.0) > PERSONALITY_SUM_TOLERANCE:
            raise ValueError(f"personality weights sum to {total!r}, expected 1")

    def as_array(self) -> np.ndarray:
        return np.array([self.knowledge, self.reputation, self.popularity])


@dataclass
class Actor:
    """One network member: knowledge base plus the scalar social state."""

    id: int
    kb: KnowledgeBase
    personality: Personality
    popularity: float = 0.0
    willingness: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.popularity <= 1.0:
            raise ValueError(f"popularity {self.popularity!r} outside [0, 1]")
        if not 0.0 <= self.willingness <= 1.0:
            raise ValueError(f"willingness {self.willingness!r} outside [0, 1]")


class TrustMatrix:
    """Directed pairwise trust; row = truster, column = trustee.

    Entries live in [0, 1]; the diagonal (self-trust) is pinned to 1.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        matrix = np.asarray(matrix, dtype=float).copy()
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("trust matrix must be square")
        matrix = clamped_array(matrix, 0.0, 1.0)
        if not np.allclose(np.diag(matrix), 1.0, atol=DRIFT_TOLERANCE):
            raise ValueError("self-trust (diagonal) must be 1")
        np.fill_diagonal(matrix, 1.0)
        self.matrix = matrix

    @classmethod
    def uniform(cls, n: int, off_diagonal: float) -> "TrustMatrix":
        m = np.full((n, n), float(off_diagonal))
        np.fill_diagonal(m, 1.0)
        return cls(m)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def copy(self) -> "TrustMatrix":
        return TrustMatrix(self.matrix)


def reputation(actor_id: int, tm: TrustMatrix) -> float:
    """Mean trust of all *other* actors in this one; self-trust is excluded."""
    n = tm.size
    if n < 2:
        raise ValueError("reputation is undefined for fewer than two actors")
    column = tm.matrix[:, actor_id]
    return float((column.sum() - tm.matrix[actor_id, actor_id]) / (n - 1))


def utility(actor: Actor, tm: TrustMatrix) -> float:
    """Convex combination of average knowledge, reputation, and popularity."""
    p = actor.personality
    return (
        p.knowledge * average_knowledge(actor.kb)
        + p.reputation * reputation(actor.id, tm)
        + p.popularity * actor.popularity
    )


def decay_popularity(popularity: float, decay_rate: float) -> float:
    """One idle-step popularity decay: multiply by (1 - decay_rate)."""
    if not 0.0 <= popularity <= 1.0:
        raise ValueError(f"popularity {popularity!r} outside [0, 1]")
    if not 0.0 <= decay_rate <= 1.0:
        raise ValueError(f"decay rate {decay_rate!r} outside [0, 1]")
    return popularity * (1.0 - decay_rate)
