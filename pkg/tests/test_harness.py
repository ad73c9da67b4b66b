"""Population initialization, the session loop, snapshots, determinism."""

import numpy as np
import pytest

from friendcast.harness import (
    ConfigError,
    ScenarioConfig,
    _tier_counts,
    init_population,
    run,
    simulate,
    step,
    take_snapshot,
)


def tiny_config(**overrides):
    base = dict(
        n_actors=8,
        n_assertions=3,
        n_receivers=1,
        n_steps=40,
        snapshot_every=10,
        knowledge_weight=0.2,
        reputation_weight=0.7,
        popularity_weight=0.1,
        rng_seed=7,
    )
    base.update(overrides)
    return ScenarioConfig(**base)


def test_config_validation_catches_bad_values():
    with pytest.raises(ConfigError):
        tiny_config(n_receivers=8).validate()  # >= n_actors
    with pytest.raises(ConfigError):
        tiny_config(popularity_weight=0.5).validate()  # weights sum != 1
    with pytest.raises(ConfigError):
        tiny_config(knowledge_tiers=[[0.5, 0.9]]).validate()  # fractions != 1
    with pytest.raises(ConfigError):
        tiny_config(remembrance=1.5).validate()
    with pytest.raises(ConfigError):
        ScenarioConfig.from_dict({"no_such_key": 1})
    with pytest.raises(ConfigError):
        tiny_config(ontology="random").validate()


def test_config_round_trips_through_dict():
    cfg = tiny_config()
    again = ScenarioConfig.from_dict(cfg.to_dict())
    assert again == cfg


def test_tier_counts_largest_remainder():
    thirds = [1 / 3, 1 / 3, 1 / 3]
    assert _tier_counts(thirds, 99) == [33, 33, 33]
    assert _tier_counts(thirds, 100) == [34, 33, 33]
    assert _tier_counts([0.5, 0.25, 0.25], 8) == [4, 2, 2]


def test_init_population_hits_tier_targets_exactly():
    cfg = tiny_config(
        n_actors=9,
        knowledge_tiers=[[1 / 3, 0.9], [1 / 3, 0.1], [1 / 3, 0.5]],
    )
    world = init_population(cfg, np.random.default_rng(0))
    per_actor = world.average_knowledge_per_actor()
    assert np.allclose(per_actor[:3], 0.9)
    assert np.allclose(per_actor[3:6], 0.1)
    assert np.allclose(per_actor[6:], 0.5)
    assert np.all(np.abs(world.belief) == 1.0)
    assert np.all(world.popularity == 0.0)
    off_diag = world.trust[~np.eye(cfg.n_actors, dtype=bool)]
    assert np.all(off_diag == 0.5)
    assert np.all(np.diag(world.trust) == 1.0)


def test_init_population_zero_tier_gives_zero_values():
    cfg = tiny_config(knowledge_tiers=[[1.0, 0.0]])
    world = init_population(cfg, np.random.default_rng(0))
    assert np.all(world.values() == 0.0)


def test_step_is_deterministic_given_seed():
    cfg = tiny_config()

    def trajectory():
        rng = np.random.default_rng(cfg.rng_seed)
        world = init_population(cfg, rng)
        outcomes = [step(world, cfg, rng) for _ in range(20)]
        return world, outcomes

    w1, o1 = trajectory()
    w2, o2 = trajectory()
    assert np.array_equal(w1.knowledge, w2.knowledge)
    assert np.array_equal(w1.belief, w2.belief)
    assert np.array_equal(w1.trust, w2.trust)
    assert np.array_equal(w1.popularity, w2.popularity)
    assert [o.sent for o in o1] == [o.sent for o in o2]
    assert [o.responders for o in o1] == [o.responders for o in o2]


def test_ignorant_sender_is_forced_to_hold():
    cfg = tiny_config(knowledge_tiers=[[1.0, 0.0]], popularity_decay=0.0)
    rng = np.random.default_rng(1)
    world = init_population(cfg, rng)
    before = world.copy()
    out = step(world, cfg, rng)
    assert not out.sent and out.assertion_index is None
    assert np.array_equal(world.knowledge, before.knowledge)
    assert np.array_equal(world.trust, before.trust)


def test_two_actor_world_always_pairs_them():
    cfg = tiny_config(n_actors=2, n_steps=10)
    rng = np.random.default_rng(3)
    world = init_population(cfg, rng)
    for _ in range(10):
        out = step(world, cfg, rng)
        assert out.utility_deltas.keys() == {0, 1}


def test_run_snapshot_schedule():
    assert [s.step for s in run(tiny_config(n_steps=0))] == [0]
    assert [s.step for s in run(tiny_config(n_steps=40, snapshot_every=10))] == [
        0, 10, 20, 30, 40,
    ]
    # a final step off the grid is still recorded, once
    assert [s.step for s in run(tiny_config(n_steps=7, snapshot_every=3))] == [0, 3, 6, 7]


def test_snapshot_histogram_counts_actors():
    cfg = tiny_config()
    rng = np.random.default_rng(5)
    world = init_population(cfg, rng)
    snap = take_snapshot(world, 0)
    assert snap.histogram.sum() == cfg.n_actors
    assert len(snap.histogram) == 20
    # mean value of +1 everywhere lands in the last (closed) bin
    world.belief[:] = 1.0
    world.knowledge[:] = 1.0
    snap = take_snapshot(world, 1)
    assert snap.histogram[-1] == cfg.n_actors
    assert snap.mean_abs_value == 1.0


def test_all_knowing_agreeing_population_stays_at_one():
    cfg = tiny_config(
        n_steps=30,
        knowledge_tiers=[[1.0, 1.0]],
        remembrance=1.0,
    )
    rng = np.random.default_rng(9)
    world = init_population(cfg, rng)
    world.belief[:] = 1.0  # identical beliefs everywhere
    snaps = [take_snapshot(world, 0)]
    for t in range(30):
        step(world, cfg, rng)
        snaps.append(take_snapshot(world, t + 1))
    assert all(s.mean_abs_value == 1.0 for s in snaps)


def test_simulate_series_is_reproducible():
    cfg = tiny_config(n_steps=30, snapshot_every=5)
    r1 = simulate(cfg)
    r2 = simulate(cfg)
    assert len(r1.snapshots) == len(r2.snapshots)
    for s1, s2 in zip(r1.snapshots, r2.snapshots):
        assert s1.step == s2.step
        assert s1.mean_value == s2.mean_value
        assert s1.mean_abs_value == s2.mean_abs_value
        assert s1.std_value == s2.std_value
        assert np.array_equal(s1.actor_mean_value, s2.actor_mean_value)
        assert np.array_equal(s1.histogram, s2.histogram)
    assert r1.sends == r2.sends and r1.responses == r2.responses


def test_population_invariants_hold_at_every_snapshot():
    cfg = tiny_config(n_steps=60, snapshot_every=6, remembrance=0.95,
                      ontology_belief_weight="source")
    rng = np.random.default_rng(cfg.rng_seed)
    world = init_population(cfg, rng)
    for t in range(cfg.n_steps):
        step(world, cfg, rng)
        if t % cfg.snapshot_every == 0:
            world.validate()
            snap = take_snapshot(world, t)
            assert snap.histogram.sum() == cfg.n_actors


def test_explicit_ontology_is_used():
    m = [[1.0, -1.0, 0.0], [-1.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
    cfg = tiny_config(ontology=m)
    cfg.validate()
    world = init_population(cfg, np.random.default_rng(0))
    assert np.array_equal(world.ontology.m, np.array(m))
    mismatched = tiny_config(ontology=[[1.0, 0.0], [0.0, 1.0]])  # 2x2 for 3 assertions
    with pytest.raises(ConfigError):
        init_population(mismatched, np.random.default_rng(0))
