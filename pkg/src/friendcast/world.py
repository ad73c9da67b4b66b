"""Population state container shared by the transfer, game, and harness layers.

The world keeps the whole population in flat numpy arrays so that a
simulation session touches a handful of vectorized operations instead of
per-actor Python objects. Actor objects can still be materialized for the
value-level API.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .actors import Actor, Personality, TrustMatrix
from .knowledge import KnowledgeBase, Ontology


@dataclass
class World:
    """Mutable population state: one row per actor in each array."""

    knowledge: np.ndarray  # (n, A) knowledge quantities in [0, 1]
    belief: np.ndarray  # (n, A) beliefs in [-1, 1]
    popularity: np.ndarray  # (n,) in [0, 1]
    trust: np.ndarray  # (n, n), row = truster, column = trustee, diag = 1
    personality: np.ndarray  # (n, 3) columns: knowledge/reputation/popularity
    willingness: np.ndarray  # (n,) in [0, 1]
    ontology: Ontology

    @property
    def n_actors(self) -> int:
        return self.knowledge.shape[0]

    @property
    def n_assertions(self) -> int:
        return self.knowledge.shape[1]

    def copy(self) -> "World":
        # The ontology is immutable and safely shared between copies.
        return World(
            knowledge=self.knowledge.copy(),
            belief=self.belief.copy(),
            popularity=self.popularity.copy(),
            trust=self.trust.copy(),
            personality=self.personality,
            willingness=self.willingness,
            ontology=self.ontology,
        )

    def actor(self, actor_id: int) -> Actor:
        """Materialize one row as a value-level Actor."""
        row = self.personality[actor_id]
        return Actor(
            id=int(actor_id),
            kb=KnowledgeBase(self.knowledge[actor_id], self.belief[actor_id]),
            personality=Personality(float(row[0]), float(row[1]), float(row[2])),
            popularity=float(self.popularity[actor_id]),
            willingness=float(self.willingness[actor_id]),
        )

    def trust_matrix(self) -> TrustMatrix:
        return TrustMatrix(self.trust)

    def values(self) -> np.ndarray:
        """(n, A) matrix of assertion values k*b."""
        return self.knowledge * self.belief

    def mean_values(self) -> np.ndarray:
        """Per-actor mean signed assertion value."""
        return self.values().mean(axis=1)

    def average_knowledge_per_actor(self) -> np.ndarray:
        """Per-actor mean absolute assertion value."""
        return np.abs(self.values()).mean(axis=1)

    def reputations(self, ids=None) -> np.ndarray:
        """Mean trust of all other actors in each requested actor."""
        n = self.n_actors
        if ids is None:
            ids = np.arange(n)
        ids = np.asarray(ids)
        columns = self.trust[:, ids].sum(axis=0) - self.trust[ids, ids]
        return columns / (n - 1)

    def utilities(self, ids) -> np.ndarray:
        """Utility of each requested actor under its own personality."""
        ids = np.asarray(ids)
        k = np.abs(self.knowledge[ids] * self.belief[ids]).mean(axis=1)
        r = self.reputations(ids)
        p = self.popularity[ids]
        weights = self.personality[ids]
        return weights[:, 0] * k + weights[:, 1] * r + weights[:, 2] * p

    def validate(self) -> None:
        """Raise if any population invariant is broken."""
        if not (self.knowledge.min() >= 0.0 and self.knowledge.max() <= 1.0):
            raise ValueError("knowledge component outside [0, 1]")
        if not (self.belief.min() >= -1.0 and self.belief.max() <= 1.0):
            raise ValueError("belief component outside [-1, 1]")
        if not (self.popularity.min() >= 0.0 and self.popularity.max() <= 1.0):
            raise ValueError("popularity outside [0, 1]")
        if not (self.trust.min() >= 0.0 and self.trust.max() <= 1.0):
            raise ValueError("trust outside [0, 1]")
        if not np.array_equal(np.diag(self.trust), np.ones(self.n_actors)):
            raise ValueError("self-trust diagonal must be 1")


def world_from_actors(actors, trust: TrustMatrix, ontology: Ontology) -> World:
    """Assemble a World from value-level actors plus a trust matrix."""
    actors = sorted(actors, key=lambda a: a.id)
    if [a.id for a in actors] != list(range(len(actors))):
        raise ValueError("actor ids must be dense integers starting at 0")
    return World(
        knowledge=np.array([a.kb.k for a in actors]),
        belief=np.array([a.kb.b for a in actors]),
        popularity=np.array([a.popularity for a in actors]),
        trust=trust.matrix.copy(),
        personality=np.array([a.personality.as_array() for a in actors]),
        willingness=np.array([a.willingness for a in actors]),
        ontology=ontology,
    )
