
from online_ramsey import (
    BLUE,
    RED,
    GameStatus,
    apply_move,
    blocking_painter,
    creates_red_violation,
    new_game,
    random_color,
    random_painter,
    run_match,
    scripted_painter,
    constructive_builder,
)
from online_ramsey.graph import has_cycle_with_length_in
from online_ramsey.verify import star_path_targets

from helpers import RandomBuilder


def test_blocking_first_edge_is_red():
    p = blocking_painter(7)
    state = new_game(star_path_targets(7))
    assert p.choose_color(state, (0, 1)) is RED


def test_blocking_refuses_third_red_at_a_vertex():
    p = blocking_painter(7)
    state = new_game(star_path_targets(7))
    state = apply_move(state, 0, 1, RED)
    state = apply_move(state, 0, 2, RED)
    assert p.choose_color(state, (0, 3)) is BLUE


def test_blocking_allows_long_red_cycles():
    l = 8  # forbidden cycle lengths: 3..4
    p = blocking_painter(l)
    state = new_game(star_path_targets(l))
    for i in range(4):
        state = apply_move(state, i, i + 1, RED)
    # closing chord makes a C5 > floor(8/2): red
    assert p.choose_color(state, (0, 4)) is RED
    # but a short chord is refused
    assert p.choose_color(state, (0, 2)) is BLUE


def test_scripted_painter_replies_then_blue():
    p = scripted_painter([RED, RED, BLUE])
    state = new_game(star_path_targets(9))
    got = [p.choose_color(state, (0, 1)) for _ in range(5)]
    assert got == [RED, RED, BLUE, BLUE, BLUE]


def test_random_painter_deterministic_per_seed():
    a = [random_color(123, i) for i in range(100)]
    b = [random_color(123, i) for i in range(100)]
    assert a == b
    c = [random_color(124, i) for i in range(100)]
    assert a != c
    assert {RED, BLUE} == set(a)  # both colors appear


def test_random_painter_uses_move_index():
    p = random_painter(5)
    state = new_game(star_path_targets(5))
    first = p.choose_color(state, (0, 1))
    # same state, same index: same color even on a fresh session
    assert random_painter(5).choose_color(state, (0, 1)) is first


def test_blocking_board_invariant_random_builders():
    # after every prefix: red degree <= 2 and no red cycle of length <= l//2
    for l in (7, 10):
        for seed in range(200):
            painter = blocking_painter(l)
            builder = RandomBuilder(seed * 31 + l)
            state = new_game(star_path_targets(l))
            for _ in range(20):
                u, v = builder.next_move(state)
                color = painter.choose_color(state, (u, v))
                # blue-minimality: blue only when red is impossible
                assert (color is BLUE) == creates_red_violation(state.board, u, v, l)
                state = apply_move(state, u, v, color)
                board = state.board
                assert board.max_degree(RED) <= 2
                assert not has_cycle_with_length_in(board, RED, 3, l // 2)
                if state.status is not GameStatus.ONGOING:
                    break


def test_seed_zero_vs_constructive_l6():
    out = run_match(constructive_builder(6), random_painter(0), star_path_targets(6), 9)
    assert out.status is not GameStatus.ONGOING
    assert out.rounds <= 9


def test_blocking_survives_the_l4_script_under_budget():
    # the l=4 construction needs 6 rounds; capped at 5 the blocking painter
    # is still alive
    out = run_match(constructive_builder(4), blocking_painter(4), star_path_targets(4), 5)
    assert out.status is GameStatus.ONGOING
    assert out.rounds == 5
