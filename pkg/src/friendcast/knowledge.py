"""Assertion algebra: fuzzy knowledge/belief tuples and the learning operator.

An assertion is a pair (k, b): k in [0, 1] is the quantity of knowledge an
actor holds about one elementary fact, b in [-1, 1] is the belief attached
to it (negative = disbelief, 0 = unverifiable rumor). The product k*b is the
assertion's value; the mean absolute value across a knowledge base is the
actor's average knowledge.

Everything here is a pure function on plain values; nothing holds shared
mutable state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Out-of-range excursions up to this size are treated as floating-point
# drift and clamped; anything larger means the algebra produced an invalid
# value and is a bug, not noise.
DRIFT_TOLERANCE = 1e-9


class DriftError(ArithmeticError):
    """A result left its valid range by more than floating-point drift."""


def _clamped(value: float, lo: float, hi: float) -> float:
    if value < lo:
        if lo - value > DRIFT_TOLERANCE:
            raise DriftError(f"value {value!r} below {lo} beyond drift tolerance")
        return lo
    if value > hi:
        if value - hi > DRIFT_TOLERANCE:
            raise DriftError(f"value {value!r} above {hi} beyond drift tolerance")
        return hi
    return value


def clamped_array(values: np.ndarray, lo: float, hi: float) -> np.ndarray:
    """Clamp an array into [lo, hi], rejecting excursions beyond drift."""
    low = values.min()
    high = values.max()
    if lo - low > DRIFT_TOLERANCE or high - hi > DRIFT_TOLERANCE:
        raise DriftError(f"array range [{low!r}, {high!r}] outside [{lo}, {hi}]")
    return np.clip(values, lo, hi)


@dataclass(frozen=True)
class Assertion:
    """One unit of transferable information: knowledge quantity k, belief b."""

    k: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "k", _clamped(float(self.k), 0.0, 1.0))
        object.__setattr__(self, "b", _clamped(float(self.b), -1.0, 1.0))

    @property
    def value(self) -> float:
        return self.k * self.b


def assertion_value(a: Assertion) -> float:
    """Value of an assertion: knowledge times belief, in [-1, 1]."""
    return a.k * a.b


class KnowledgeBase:
    """Fixed-length sequence of assertions, stored as parallel k/b arrays.

    The length is the global assertion count and never changes during a run.
    Instances own their arrays (inputs are copied) and treat them as
    read-only; operations return new KnowledgeBase values.
    """

    __slots__ = ("k", "b")

    def __init__(self, k, b):
        k = np.asarray(k, dtype=float).copy()
        b = np.asarray(b, dtype=float).copy()
        if k.ndim != 1 or k.shape != b.shape:
            raise ValueError("knowledge and belief arrays must be equal-length 1-D")
        self.k = clamped_array(k, 0.0, 1.0)
        self.b = clamped_array(b, -1.0, 1.0)

    @classmethod
    def from_assertions(cls, assertions) -> "KnowledgeBase":
        items = list(assertions)
        return cls([a.k for a in items], [a.b for a in items])

    def __len__(self) -> int:
        return self.k.shape[0]

    def __getitem__(self, i: int) -> Assertion:
        return Assertion(float(self.k[i]), float(self.b[i]))

    def assertions(self) -> list[Assertion]:
        return [self[i] for i in range(len(self))]

    def values(self) -> np.ndarray:
        return self.k * self.b

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KnowledgeBase)
            and np.array_equal(self.k, other.k)
            and np.array_equal(self.b, other.b)
        )


def average_knowledge(kb: KnowledgeBase) -> float:
    """Mean absolute assertion value; the actor's ability to reason, in [0, 1]."""
    if len(kb) == 0:
        raise ValueError("average knowledge is undefined for an empty knowledge base")
    return float(np.mean(np.abs(kb.values())))


def forget(kb: KnowledgeBase, remembrance: float) -> KnowledgeBase:
    """Scale both tuple components by sqrt(remembrance).

    remembrance=1 leaves the base untouched, remembrance=0 erases it; each
    assertion's value shrinks by exactly the remembrance factor.
    """
    if not 0.0 <= remembrance <= 1.0:
        raise ValueError(f"remembrance must be in [0, 1], got {remembrance!r}")
    root = np.sqrt(remembrance)
    return KnowledgeBase(kb.k * root, kb.b * root)


def combined_knowledge(k_have, k_added):
    """Knowledge part of the learning operator: k + k'(1 - k).

    Smooth interpolation between fully-overlapping (max) and disjoint
    (capped sum) partial knowledge; works elementwise on arrays.
    """
    return k_have + k_added * (1.0 - k_have)


def combined_belief(b_have, b_added, weight):
    """Belief part of the learning operator.

    The added belief is weighted by `weight` (normally the added knowledge
    quantity, so confident ignorance carries no force) and saturates toward
    +1 or -1 depending on the added belief's sign. Elementwise on arrays.
    """
    gain = np.where(b_added >= 0.0, 1.0 - b_have, 1.0 + b_have)
    return b_have + weight * b_added * gain


def learn(x: Assertion, y: Assertion) -> Assertion:
    """Combine two instances of the same assertion.

    Learning an instance with zero knowledge changes nothing; an instance
    with full knowledge absorbs everything; results never exceed full
    knowledge or leave the belief range.
    """
    k = _clamped(float(combined_knowledge(x.k, y.k)), 0.0, 1.0)
    b = _clamped(float(combined_belief(x.b, y.b, y.k)), -1.0, 1.0)
    return Assertion(k, b)


class Ontology:
    """Square matrix of pairwise assertion correlations.

    Entry [i, j] says how a belief change in assertion i pulls the belief of
    assertion j. The diagonal is 1; off-diagonal entries need not be
    symmetric. Stored dense and read-only.
    """

    __slots__ = ("m",)

    def __init__(self, m):
        m = np.asarray(m, dtype=float).copy()
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("ontology matrix must be square")
        m = clamped_array(m, -1.0, 1.0)
        if not np.allclose(np.diag(m), 1.0, atol=DRIFT_TOLERANCE):
            raise ValueError("ontology diagonal must be all ones")
        np.fill_diagonal(m, 1.0)
        m.setflags(write=False)
        self.m = m

    @classmethod
    def identity(cls, size: int) -> "Ontology":
        return cls(np.eye(size))

    @property
    def size(self) -> int:
        return self.m.shape[0]
