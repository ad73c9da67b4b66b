"""Walk through the assertion algebra: values, forgetting, and learning.

Run:  python3 demos/01_assertion_algebra.py
"""

import numpy as np

from friendcast import Assertion, KnowledgeBase, assertion_value, average_knowledge, forget, learn

print("An assertion pairs a quantity of knowledge with a belief.")
astrology = Assertion(0.3, -0.9)  # knows a little, firmly disbelieves
print(f"  {astrology}  ->  value {assertion_value(astrology):+.2f}")
rumor = Assertion(0.8, 0.0)  # well informed about something unverifiable
print(f"  {rumor}  ->  value {assertion_value(rumor):+.2f}")

print("\nAverage knowledge is the mean absolute value across the base.")
kb = KnowledgeBase.from_assertions([astrology, rumor, Assertion(0.5, 1.0)])
print(f"  base values {np.round(kb.values(), 3)}  ->  K = {average_knowledge(kb):.3f}")

print("\nForgetting shrinks both components, so values scale linearly:")
for rate in (1.0, 0.81, 0.25):
    faded = forget(kb, rate)
    print(f"  remembrance {rate:4.2f}:  K = {average_knowledge(faded):.3f}")

print("\nLearning combines two instances of the same assertion.")
cases = [
    (Assertion(0.5, 0.0), Assertion(0.5, 0.8), "half-knowledge meets a believer"),
    (Assertion(0.4, -0.7), Assertion(0.0, 1.0), "an ignorant enthusiast changes nothing"),
    (Assertion(0.4, -0.7), Assertion(1.0, 1.0), "full knowledge absorbs"),
]
for have, heard, label in cases:
    got = learn(have, heard)
    print(f"  {label}:")
    print(f"    {have} + {heard} -> k={got.k:.3f}, b={got.b:+.3f}")

print("\nBeliefs saturate: repeated agreement approaches +1 without crossing it.")
a = Assertion(0.5, 0.1)
trail = [a.b]
for _ in range(6):
    a = learn(a, Assertion(0.6, 0.9))
    trail.append(a.b)
print("  belief trail:", [f"{b:+.3f}" for b in trail])
