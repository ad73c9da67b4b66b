"""Population setup, the random-session loop, and snapshot metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, asdict

import numpy as np

from .game import StrategyProfile, build_payoff_tensor, select_profile
from .knowledge import Ontology
from .transfer import BELIEF_WEIGHT_MODES, SessionOutcome, TransferParams, execute_session
from .world import World

HISTOGRAM_BINS = 20
_BIN_EDGES = np.linspace(-1.0, 1.0, HISTOGRAM_BINS + 1)


class ConfigError(ValueError):
    """A scenario configuration failed validation."""


@dataclass
class ScenarioConfig:
    """Everything that pins down one simulation run."""

    n_actors: int = 100
    n_assertions: int = 10
    n_receivers: int = 1
    n_steps: int = 50_000
    snapshot_every: int = 500
    knowledge_weight: float = 0.2
    reputation_weight: float = 0.7
    popularity_weight: float = 0.1
    knowledge_tiers: list = field(default_factory=lambda: [[1 / 3, 0.9], [1 / 3, 0.1], [1 / 3, 0.5]])
    remembrance: float = 1.0
    trust_history_weight: float = 0.5
    popularity_decay: float = 0.01
    willingness: float = 1.0
    trust_init: float = 0.5
    ontology: object = "identity"  # "identity" or an explicit matrix (list of lists)
    ontology_belief_weight: str = "transferred"
    rng_seed: int = 0

    def validate(self) -> None:
        if self.n_actors < 2:
            raise ConfigError("need at least two actors")
        if self.n_assertions < 1:
            raise ConfigError("need at least one assertion")
        if not 1 <= self.n_receivers < self.n_actors:
            raise ConfigError("n_receivers must be >= 1 and below n_actors")
        if self.n_steps < 0 or self.snapshot_every < 1:
            raise ConfigError("n_steps must be >= 0 and snapshot_every >= 1")
        for name in (
            "knowledge_weight",
            "reputation_weight",
            "popularity_weight",
            "remembrance",
            "trust_history_weight",
            "popularity_decay",
            "willingness",
            "trust_init",
        ):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ConfigError(f"{name}={v!r} outside [0, 1]")
        weight_sum = self.knowledge_weight + self.reputation_weight + self.popularity_weight
        if abs(weight_sum - 1.0) > 1e-9:
            raise ConfigError(f"personality weights sum to {weight_sum!r}, expected 1")
        if not self.knowledge_tiers:
            raise ConfigError("knowledge_tiers must be nonempty")
        fractions = 0.0
        for tier in self.knowledge_tiers:
            if len(tier) != 2:
                raise ConfigError("each knowledge tier is a [fraction, target] pair")
            frac, target = tier
            if frac < 0 or not 0.0 <= target <= 1.0:
                raise ConfigError(f"bad knowledge tier {tier!r}")
            fractions += frac
        if abs(fractions - 1.0) > 1e-9:
            raise ConfigError(f"tier fractions sum to {fractions!r}, expected 1")
        if self.ontology_belief_weight not in BELIEF_WEIGHT_MODES:
            raise ConfigError(f"unknown ontology_belief_weight {self.ontology_belief_weight!r}")
        if not isinstance(self.ontology, str):
            Ontology(self.ontology)  # raises on a malformed matrix
        elif self.ontology != "identity":
            raise ConfigError(f"unknown ontology preset {self.ontology!r}")

    def build_ontology(self) -> Ontology:
        if isinstance(self.ontology, str):
            return Ontology.identity(self.n_assertions)
        m = np.asarray(self.ontology, dtype=float)
        if m.shape != (self.n_assertions, self.n_assertions):
            raise ConfigError("explicit ontology shape does not match n_assertions")
        return Ontology(m)

    def transfer_params(self) -> TransferParams:
        return TransferParams(
            remembrance=self.remembrance,
            trust_history_weight=self.trust_history_weight,
            popularity_decay=self.popularity_decay,
            belief_weight_mode=self.ontology_belief_weight,
        )

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ScenarioConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**data)
        cfg.validate()
        return cfg


@dataclass
class Snapshot:
    """Knowledge-distribution record for one step of one run."""

    step: int
    actor_mean_value: np.ndarray  # per-actor mean signed value
    actor_mean_abs_value: np.ndarray  # per-actor average knowledge
    actor_popularity: np.ndarray
    actor_reputation: np.ndarray
    histogram: np.ndarray  # counts of actor_mean_value over 20 bins on [-1, 1]
    mean_value: float
    mean_abs_value: float
    std_value: float


def take_snapshot(world: World, step: int) -> Snapshot:
    values = world.mean_values()
    abs_values = world.average_knowledge_per_actor()
    counts, _ = np.histogram(values, bins=_BIN_EDGES)
    return Snapshot(
        step=step,
        actor_mean_value=values,
        actor_mean_abs_value=abs_values,
        actor_popularity=world.popularity.copy(),
        actor_reputation=world.reputations(),
        histogram=counts,
        mean_value=float(values.mean()),
        mean_abs_value=float(abs_values.mean()),
        std_value=float(values.std()),
    )


def _tier_counts(fractions, n: int) -> list[int]:
    """Largest-remainder apportionment, ties resolved in tier order."""
    quotas = [f * n for f in fractions]
    counts = [math.floor(q) for q in quotas]
    remainders = sorted(
        range(len(quotas)), key=lambda t: (-(quotas[t] - counts[t]), t)
    )
    for t in remainders[: n - sum(counts)]:
        counts[t] += 1
    return counts


def init_population(cfg: ScenarioConfig, rng: np.random.Generator) -> World:
    """Build the starting world.

    Actors fill the tiers in id order; every assertion starts at the tier's
    knowledge target with a belief drawn uniformly from {-1, +1}, so the
    actor's average knowledge equals the target exactly. Trust starts flat
    at trust_init off the diagonal; popularity starts at zero.
    """
    cfg.validate()
    n, a = cfg.n_actors, cfg.n_assertions
    counts = _tier_counts([t[0] for t in cfg.knowledge_tiers], n)
    knowledge = np.empty((n, a))
    start = 0
    for count, (_, target) in zip(counts, cfg.knowledge_tiers):
        knowledge[start : start + count] = target
        start += count
    belief = rng.integers(0, 2, size=(n, a)) * 2.0 - 1.0
    trust = np.full((n, n), float(cfg.trust_init))
    np.fill_diagonal(trust, 1.0)
    personality = np.tile(
        [cfg.knowledge_weight, cfg.reputation_weight, cfg.popularity_weight], (n, 1)
    )
    return World(
        knowledge=knowledge,
        belief=belief,
        popularity=np.zeros(n),
        trust=trust,
        personality=personality,
        willingness=np.full(n, float(cfg.willingness)),
        ontology=cfg.build_ontology(),
    )


def step(world: World, cfg: ScenarioConfig, rng: np.random.Generator) -> SessionOutcome:
    """One simulation step: draw a session, solve the game, play it out.

    The sender is drawn uniformly, then n_receivers distinct others (draw
    order is the friend-list order), then an assertion uniformly among the
    sender's known ones. A sender who knows nothing is forced to hold.
    """
    n = world.n_actors
    sender = int(rng.integers(n))
    others = np.concatenate([np.arange(sender), np.arange(sender + 1, n)])
    receivers = [int(r) for r in rng.choice(others, size=cfg.n_receivers, replace=False)]
    params = cfg.transfer_params()

    known = np.flatnonzero(world.knowledge[sender] > 0.0)
    if known.size == 0:
        profile = StrategyProfile.all_hold(cfg.n_receivers)
        return execute_session(world, sender, receivers, None, profile, params)

    index = int(rng.choice(known))
    tensor = build_payoff_tensor(world, sender, receivers, index, params)
    profile = select_profile(tensor)
    return execute_session(world, sender, receivers, index, profile, params)


@dataclass
class RunResult:
    """Snapshot series plus the run-level action counters."""

    snapshots: list[Snapshot]
    sends: int
    feedback_slots: int
    responses: int
    n_steps: int

    @property
    def send_rate(self) -> float:
        return self.sends / self.n_steps if self.n_steps else 0.0

    @property
    def feedback_rate(self) -> float:
        return self.responses / self.feedback_slots if self.feedback_slots else 0.0

    def steps_to_threshold(self, threshold: float) -> int | None:
        for snap in self.snapshots:
            if snap.mean_abs_value >= threshold:
                return snap.step
        return None


def simulate(cfg: ScenarioConfig) -> RunResult:
    """Run a full scenario and return snapshots plus action counters."""
    cfg.validate()
    rng = np.random.default_rng(cfg.rng_seed)
    world = init_population(cfg, rng)
    snapshots = [take_snapshot(world, 0)]
    sends = feedback_slots = responses = 0
    for t in range(1, cfg.n_steps + 1):
        outcome = step(world, cfg, rng)
        if outcome.sent:
            sends += 1
            feedback_slots += cfg.n_receivers
            responses += len(outcome.responders)
        if t % cfg.snapshot_every == 0 or t == cfg.n_steps:
            snapshots.append(take_snapshot(world, t))
    return RunResult(
        snapshots=snapshots,
        sends=sends,
        feedback_slots=feedback_slots,
        responses=responses,
        n_steps=cfg.n_steps,
    )


def run(cfg: ScenarioConfig) -> list[Snapshot]:
    """Snapshot series for one scenario: step 0, every snapshot_every, the end."""
    return simulate(cfg).snapshots
