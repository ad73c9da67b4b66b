"""Trace one broadcast session in a three-actor world.

Run:  python3 demos/02_single_session.py
"""

import numpy as np

from friendcast import Ontology, StrategyProfile, TransferParams, World, execute_session


def show(world, label):
    print(label)
    for x in range(world.n_actors):
        vals = np.round(world.values()[x], 3)
        print(
            f"  actor {x}: values {vals}  popularity {world.popularity[x]:.3f}  "
            f"trusts others {np.round(np.delete(world.trust[x], x), 2)}"
        )


world = World(
    knowledge=np.array([[0.9, 0.9], [0.1, 0.2], [0.5, 0.6]]),
    belief=np.array([[1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]),
    popularity=np.array([0.2, 0.0, 0.4]),
    trust=np.array([[1.0, 0.5, 0.5], [0.5, 1.0, 0.5], [0.5, 0.5, 1.0]]),
    personality=np.tile([0.2, 0.7, 0.1], (3, 1)),
    willingness=np.ones(3),
    ontology=Ontology.identity(2),
)

show(world, "before the session:")

params = TransferParams(popularity_decay=0.05, belief_weight_mode="source")
outcome = execute_session(
    world,
    sender=0,
    receivers=[1, 2],
    index=0,
    profile=StrategyProfile(send=True, feedback=(True, True)),
    params=params,
)

print(f"\nactor 0 published assertion {outcome.assertion_index}; "
      f"responders in friend-list order: {outcome.responders}")
show(world, "\nafter the session:")
print("\nutility deltas:")
for actor, delta in outcome.utility_deltas.items():
    print(f"  actor {actor}: {delta:+.5f}")

print("""
Things to notice:
 - receiver 1 (low knowledge, agreeing belief) learned a lot; receiver 2
   (disagreeing belief) got dragged toward the sender and its trust in the
   sender collapsed, because trust reacts to the pre-transfer disagreement;
 - the sender's popularity grew with the receivers' mean value change;
 - under the "source" belief weighting the comments nudged the sender's
   belief on the published assertion.
""")
