"""Knowledge transfer, feedback transfer, and the trust/popularity updates.

A session is one atomic broadcast: the sender may publish one assertion to
every receiver at once, each receiver may then comment in friend-list
order, and trust, reputation, and popularity move as a result. Forgetting
ticks once per session for every actor, whether or not anything was sent;
actors who neither published nor commented lose a slice of popularity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .actors import Actor, TrustMatrix
from .knowledge import (
    Assertion,
    KnowledgeBase,
    Ontology,
    clamped_array,
    combined_belief,
    combined_knowledge,
    forget,
)
from .world import World

# How the learning operator weights a transferred belief when the ontology
# spreads it to correlated assertions. "transferred" uses the knowledge
# quantity actually delivered per assertion: zero off the transferred index,
# so correlated beliefs stay put and comments (which deliver no knowledge)
# leave the sender's tuples untouched. "source" uses the publishing party's
# knowledge of the transferred assertion as the weight everywhere, which
# lets correlated beliefs shift and comments sway the sender.
BELIEF_WEIGHT_MODES = ("transferred", "source")


@dataclass(frozen=True)
class TransferParams:
    """Session-level rates: remembrance, trust history weight, idle decay."""

    remembrance: float = 1.0
    trust_history_weight: float = 0.5
    popularity_decay: float = 0.0
    belief_weight_mode: str = "transferred"

    def __post_init__(self):
        for name in ("remembrance", "trust_history_weight", "popularity_decay"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name}={v!r} outside [0, 1]")
        if self.belief_weight_mode not in BELIEF_WEIGHT_MODES:
            raise ValueError(f"unknown belief weight mode {self.belief_weight_mode!r}")


@dataclass
class SessionOutcome:
    """What one session did: who acted and how each player's utility moved."""

    sent: bool
    assertion_index: int | None
    responders: tuple[int, ...] = ()
    utility_deltas: dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        if not self.sent and self.responders:
            raise ValueError("feedback without a send is infeasible")


def _transfer_deltas(m, index, k_sent, b_sent, receiver_beliefs, trust, willingness):
    """Per-assertion (dk, db) a receiver perceives from one published assertion.

    Knowledge arrives only at the transferred index, scaled by willingness.
    Belief arrives at every correlated index: a trust-weighted mix of the
    sender's belief and the receiver's own correlation-weighted guess.
    """
    guess = float(np.mean(m[:, index] * receiver_beliefs))
    db = m[index, :] * (trust * b_sent + (1.0 - trust) * guess)
    dk = np.zeros_like(db)
    dk[index] = willingness * k_sent
    return dk, db


def _feedback_deltas(m, index, b_responder, trust):
    """Per-assertion (dk, db) a sender perceives from one comment.

    Comments carry no knowledge quantity and no self-assessment term; the
    belief is scaled by the sender's trust in the responder.
    """
    db = m[index, :] * (trust * b_responder)
    return np.zeros_like(db), db


def _absorb(k_row, b_row, dk, db, belief_weight):
    """Fold perceived deltas into a knowledge row via the learning operator."""
    k_new = clamped_array(combined_knowledge(k_row, dk), 0.0, 1.0)
    b_new = clamped_array(combined_belief(b_row, db, belief_weight), -1.0, 1.0)
    return k_new, b_new


def perceived_delta(
    receiver_kb: KnowledgeBase,
    sender_assertion: Assertion,
    index: int,
    target: int,
    ontology: Ontology,
    trust: float,
    willingness: float,
) -> Assertion:
    """The tuple a receiver perceives at `target` when `index` is published."""
    dk, db = _transfer_deltas(
        ontology.m,
        index,
        sender_assertion.k,
        sender_assertion.b,
        receiver_kb.b,
        trust,
        willingness,
    )
    return Assertion(float(dk[target]), float(db[target]))


def apply_knowledge_transfer(
    receiver: Actor,
    sender: Actor,
    index: int,
    ontology: Ontology,
    tm: TrustMatrix,
    params: TransferParams,
) -> Actor:
    """One receiver absorbs a published assertion.

    The receiver's base is first degraded by remembrance, then every
    assertion is combined with the perceived delta through the learning
    operator. Returns a new Actor; the input is untouched.
    """
    trust = float(tm.matrix[receiver.id, sender.id])
    kb = forget(receiver.kb, params.remembrance)
    dk, db = _transfer_deltas(
        ontology.m,
        index,
        sender.kb.k[index],
        sender.kb.b[index],
        kb.b,
        trust,
        receiver.willingness,
    )
    weight = dk if params.belief_weight_mode == "transferred" else float(dk[index])
    k_new, b_new = _absorb(kb.k, kb.b, dk, db, weight)
    return Actor(
        id=receiver.id,
        kb=KnowledgeBase(k_new, b_new),
        personality=receiver.personality,
        popularity=receiver.popularity,
        willingness=receiver.willingness,
    )


def apply_feedback_transfer(
    sender: Actor,
    receiver: Actor,
    index: int,
    ontology: Ontology,
    tm: TrustMatrix,
    belief_weight_mode: str = "transferred",
) -> Actor:
    """The sender absorbs one comment on the assertion published this session.

    Comments do not degrade the sender's base (same time step as the
    original transfer) and never move its knowledge quantities.
    """
    trust = float(tm.matrix[sender.id, receiver.id])
    dk, db = _feedback_deltas(ontology.m, index, receiver.kb.b[index], trust)
    weight = dk if belief_weight_mode == "transferred" else float(receiver.kb.k[index])
    k_new, b_new = _absorb(sender.kb.k, sender.kb.b, dk, db, weight)
    return Actor(
        id=sender.id,
        kb=KnowledgeBase(k_new, b_new),
        personality=sender.personality,
        popularity=sender.popularity,
        willingness=sender.willingness,
    )


def popularity_update(p_old, receivers_before, receivers_after, index: int) -> float:
    """Grow popularity by the mean |value change| of the transferred assertion.

    The increment combines with the old value the same way knowledge does,
    so popularity never leaves [0, 1] and never shrinks here (idle decay is
    a separate operation).
    """
    if len(receivers_before) == 0 or len(receivers_before) != len(receivers_after):
        raise ValueError("popularity update needs matching, nonempty receiver states")
    changes = [
        abs(after.values()[index] - before.values()[index])
        for before, after in zip(receivers_before, receivers_after)
    ]
    delta = min(1.0, max(0.0, float(np.mean(changes))))
    return p_old + delta - p_old * delta


def trust_update(t_old: float, b_sender: float, b_receiver: float, history_weight: float) -> float:
    """Move directed trust toward agreement between two beliefs.

    Perfect agreement pulls trust toward 1, maximal disagreement toward
    -1 before clamping; history_weight=1 freezes trust at its old value.
    """
    delta = 1.0 - abs(b_sender - b_receiver)
    return min(1.0, max(0.0, history_weight * t_old + (1.0 - history_weight) * delta))


# --- session phases -------------------------------------------------------
#
# The phases below mutate a World in place and are composed by both
# execute_session and the payoff-tensor builder (which shares the
# forget+send stem across feedback combinations, since those phases do not
# depend on who responds).


def forget_everyone(world: World, remembrance: float) -> None:
    if remembrance != 1.0:
        root = np.sqrt(remembrance)
        world.knowledge *= root
        world.belief *= root


def send_phase(world: World, sender: int, receivers, index: int, params: TransferParams) -> None:
    """Broadcast one assertion to all receivers, then update trust and popularity."""
    receivers = list(receivers)
    m = world.ontology.m
    k_sent = float(world.knowledge[sender, index])
    b_sent = float(world.belief[sender, index])
    pre_beliefs = world.belief[receivers, index].copy()
    pre_values = world.knowledge[receivers, index] * pre_beliefs
    trust_in_sender = world.trust[receivers, sender].copy()
    willing = world.willingness[receivers]

    guess = world.belief[receivers] @ m[:, index] / world.n_assertions
    mix = trust_in_sender * b_sent + (1.0 - trust_in_sender) * guess
    dk = willing * k_sent
    world.knowledge[receivers, index] = clamped_array(
        combined_knowledge(world.knowledge[receivers, index], dk), 0.0, 1.0
    )
    if params.belief_weight_mode == "transferred":
        # Zero knowledge arrives off the transferred index, so the learning
        # operator leaves every other belief exactly unchanged.
        world.belief[receivers, index] = clamped_array(
            combined_belief(pre_beliefs, mix, dk), -1.0, 1.0
        )
    else:
        db = np.outer(mix, m[index])
        world.belief[receivers] = clamped_array(
            combined_belief(world.belief[receivers], db, dk[:, None]), -1.0, 1.0
        )

    # Receiver-side trust reacts to the agreement that held before the
    # transfer; the sender's popularity grows with what receivers learned.
    delta_t = 1.0 - np.abs(b_sent - pre_beliefs)
    xi = params.trust_history_weight
    world.trust[receivers, sender] = np.clip(
        xi * trust_in_sender + (1.0 - xi) * delta_t, 0.0, 1.0
    )
    post_values = world.knowledge[receivers, index] * world.belief[receivers, index]
    delta_p = min(1.0, max(0.0, float(np.mean(np.abs(post_values - pre_values)))))
    p = float(world.popularity[sender])
    world.popularity[sender] = p + delta_p - p * delta_p


def feedback_phase(world: World, sender: int, responder: int, index: int, params: TransferParams) -> None:
    """One receiver comments: sender absorbs it, trust and popularity update."""
    t_old = float(world.trust[sender, responder])
    b_comment = float(world.belief[responder, index])
    b_sender_old = float(world.belief[sender, index])
    if params.belief_weight_mode == "source":
        a_old = float(world.knowledge[sender, index]) * b_sender_old
        db = world.ontology.m[index] * (t_old * b_comment)
        weight = float(world.knowledge[responder, index])
        world.belief[sender] = clamped_array(
            combined_belief(world.belief[sender], db, weight), -1.0, 1.0
        )
        a_new = float(world.knowledge[sender, index] * world.belief[sender, index])
        delta_p = min(1.0, max(0.0, abs(a_new - a_old)))
    else:
        # A comment carries zero knowledge, so the zero-weighted learning
        # operator leaves the sender bitwise unchanged; only trust moves.
        delta_p = 0.0
    world.trust[sender, responder] = trust_update(
        t_old, b_comment, b_sender_old, params.trust_history_weight
    )
    p = float(world.popularity[responder])
    world.popularity[responder] = p + delta_p - p * delta_p


def decay_phase(world: World, active, decay: float) -> None:
    """Idle popularity decay for everyone who neither sent nor commented."""
    if decay == 0.0:
        return
    if active:
        saved = world.popularity[active].copy()
        world.popularity *= 1.0 - decay
        world.popularity[active] = saved
    else:
        world.popularity *= 1.0 - decay


def execute_session(
    world: World,
    sender: int,
    receivers,
    index: int | None,
    profile,
    params: TransferParams,
) -> SessionOutcome:
    """Run one atomic broadcast session in place and report utility deltas.

    Order of operations: (1) forgetting ticks for every actor; (2) on a
    send, all receivers absorb the assertion at once, then each receiver's
    trust in the sender updates and the sender's popularity grows by the
    receivers' mean value change; (3) responding receivers comment one at a
    time in friend-list order, each comment followed by the sender-side
    trust update and the responder's popularity update; (4) every actor who
    neither sent nor commented loses popularity to idle decay.

    All comparisons (trust agreement, popularity baselines, self-assessed
    guesses) use the state after this step's forgetting tick.
    """
    receivers = list(receivers)
    if sender in receivers or len(set(receivers)) != len(receivers):
        raise ValueError("receivers must be distinct from each other and the sender")
    if len(profile.feedback) != len(receivers):
        raise ValueError("profile length does not match the receiver list")
    send = bool(profile.send)
    responders = [r for r, f in zip(receivers, profile.feedback) if f]
    if not send and responders:
        raise ValueError("infeasible profile: feedback without a send")
    if send and index is None:
        raise ValueError("a send requires an assertion index")

    participants = [sender, *receivers]
    u_before = world.utilities(participants)

    forget_everyone(world, params.remembrance)
    if send:
        send_phase(world, sender, receivers, index, params)
        for r in responders:
            feedback_phase(world, sender, r, index, params)
    decay_phase(world, [sender, *responders] if send else [], params.popularity_decay)

    u_after = world.utilities(participants)
    deltas = {p: float(u_after[i] - u_before[i]) for i, p in enumerate(participants)}
    return SessionOutcome(
        sent=send,
        assertion_index=index,
        responders=tuple(responders),
        utility_deltas=deltas,
    )
