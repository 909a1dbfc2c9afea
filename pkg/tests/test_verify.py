import json

import pytest

from online_ramsey import (
    BLUE,
    RED,
    AuditViolation,
    GameStatus,
    MoveRecord,
    audit_blocking_painter,
    blocking_painter,
    budget,
    new_game,
    replay,
    run_match,
    transcript_from_json,
    verify_lower_exhaustive,
    verify_upper,
)
from online_ramsey.verify import star_path_targets

from helpers import RandomBuilder, assert_replay_deterministic


def test_verify_upper_small_values():
    rep4 = verify_upper(4)
    assert rep4.verified and rep4.max_rounds <= 6
    rep6 = verify_upper(6)
    assert rep6.verified and rep6.max_rounds <= 9
    doc = rep6.to_json()
    assert doc["result"] == "verified" and doc["l"] == 6
    assert json.loads(json.dumps(doc)) == doc


def test_verify_upper_tight_cap_counterexample_audits():
    for l in (3, 5):
        rep = verify_upper(l, budget=budget(l) - 1)
        assert rep.result == "counterexample"
        moves, targets, cap, status = transcript_from_json(rep.counterexample)
        assert status is GameStatus.ONGOING
        state = replay(moves, targets)
        assert state.status is GameStatus.ONGOING
        assert state.rounds == cap == budget(l) - 1
        # blocking-line ordering means the counterexample audits cleanly
        audit = audit_blocking_painter(moves, l)
        assert audit.red_edges + audit.blue_edges == cap
        assert audit.longest_blue_path < l
        assert_replay_deterministic(moves, targets)


def test_verify_upper_workers_match_sequential():
    seq = verify_upper(7)
    par = verify_upper(7, workers=2)
    assert seq.verified and par.verified
    assert seq.max_rounds == par.max_rounds
    assert seq.nodes == par.nodes


def test_verify_upper_workers_counterexample():
    seq = verify_upper(4, budget=5)
    par = verify_upper(4, budget=5, workers=2)
    assert seq.result == par.result == "counterexample"
    assert seq.counterexample["moves"] == par.counterexample["moves"]


def test_verify_lower_small():
    for l, expected_budget in ((2, 2), (3, 3), (4, 5)):
        rep = verify_lower_exhaustive(l)
        assert rep.verified
        assert rep.budget == expected_budget


def test_verify_lower_detects_winnable_budget():
    # one extra round makes the builder win reachable, so the sweep must
    # find a counterexample at floor(3l/2)
    rep = verify_lower_exhaustive(2, budget=3)
    assert rep.result == "counterexample"
    moves, targets, cap, status = transcript_from_json(rep.counterexample)
    state = replay(moves, targets)
    assert state.status is not GameStatus.ONGOING
    assert state.rounds <= 3
    audit_blocking_painter(moves, 2)  # the painter side still followed the rule


def test_audit_star_probe_counts():
    # builder draws a 3-edge star: replies R, R, B; |X| = 1, s = 1
    l = 7
    painter = blocking_painter(l)
    state = new_game(star_path_targets(l))
    from online_ramsey import apply_move

    for leaf in (1, 2, 3):
        color = painter.choose_color(state, (0, leaf))
        state = apply_move(state, 0, leaf, color)
    audit = audit_blocking_painter(state.transcript, l)
    assert audit.degree_two_count == 1
    assert audit.red_path_components == 1
    assert audit.red_edges == 2
    assert audit.blue_edges == 1


def test_audit_empty_transcript():
    audit = audit_blocking_painter((), 5)
    assert audit.degree_two_count == 0
    assert audit.red_path_components == 0


def test_audit_rejects_wrong_color():
    # first move must be red under the blocking rule
    bad = (MoveRecord(1, 0, 1, BLUE),)
    with pytest.raises(AuditViolation) as err:
        audit_blocking_painter(bad, 5)
    assert err.value.move_index == 1


def test_audit_rejects_red_over_blue():
    # third red at a common vertex must have been refused
    bad = (
        MoveRecord(1, 0, 1, RED),
        MoveRecord(2, 0, 2, RED),
        MoveRecord(3, 0, 3, RED),
    )
    with pytest.raises(AuditViolation) as err:
        audit_blocking_painter(bad, 5)
    assert err.value.move_index == 3


def test_audit_counting_identity_random_runs():
    # red edges = |X| + s whenever the red subgraph is a union of paths
    for l in (7, 10):
        for seed in range(120):
            painter = blocking_painter(l)
            builder = RandomBuilder(seed * 7 + l)
            out = run_match(builder, painter, star_path_targets(l), 14)
            audit = audit_blocking_painter(out.transcript, l)
            board = replay(out.transcript, star_path_targets(l)).board
            from online_ramsey.verify import _red_components

            comps = _red_components(board)
            all_paths = audit.red_path_components == len(comps)
            if all_paths:
                assert audit.red_edges == audit.degree_two_count + audit.red_path_components
