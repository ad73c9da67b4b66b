"""Build a session's payoff tensor and inspect its equilibria.

Run:  python3 demos/03_payoff_game.py
"""

import numpy as np

from friendcast import (
    Ontology,
    TransferParams,
    World,
    build_payoff_tensor,
    find_pure_nash,
    select_profile,
)

# a popularity-hungry sender with saturated popularity, one eager and one
# hostile receiver
world = World(
    knowledge=np.array([[0.8], [0.1], [0.9]]),
    belief=np.array([[1.0], [1.0], [-1.0]]),
    popularity=np.array([0.9, 0.1, 0.5]),
    trust=np.array([[1.0, 0.6, 0.6], [0.8, 1.0, 0.5], [0.2, 0.5, 1.0]]),
    personality=np.tile([0.1, 0.1, 0.8], (3, 1)),
    willingness=np.ones(3),
    ontology=Ontology.identity(1),
)
params = TransferParams(popularity_decay=0.05, belief_weight_mode="source")

tensor = build_payoff_tensor(world, sender=0, receivers=[1, 2], index=0, params=params)
print("profile -> utility deltas (sender, receiver 1, receiver 2)")
print("S = send, F = feedback, dash = hold/silent; infeasible rows collapse onto all-hold\n")
print(tensor.format_table())

equilibria = find_pure_nash(tensor)
print("\npure equilibria:", equilibria or "none")
chosen = select_profile(tensor)
print("selected profile:", chosen)
print("""
The all-hold row is negative for everyone with popularity to lose: idle
actors decay. Whether a receiver comments depends on the trust and
popularity consequences of the comment, which the tensor makes explicit.
""")
