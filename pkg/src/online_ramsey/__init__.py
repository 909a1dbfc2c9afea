"""Workbench for the (K_{1,3}, P_l) online Ramsey game."""

from .builders import (
    FrameTrace,
    ScriptBuilder,
    base_case_builder,
    budget,
    constructive_builder,
    lemma1_extend,
)
from .canonical import (
    MAX_CANON_VERTICES,
    SizeExceededError,
    canonical_key,
    canonical_key_with_pending,
    vertex_orbits,
)
from .engine import (
    FRESH,
    BuilderSession,
    GameOverError,
    GameState,
    GameStatus,
    IllegalEdgeError,
    MoveRecord,
    Outcome,
    PainterSession,
    StrategyFault,
    apply_move,
    new_game,
    replay,
    resolve_fresh,
    run_match,
    transcript_from_json,
    transcript_to_json,
)
from .graph import (
    BLUE,
    RED,
    Color,
    ColoredGraph,
    DuplicateEdgeError,
    LoopEdgeError,
    TargetPair,
    TargetSpec,
    UnsupportedTargetError,
    add_edge,
    clique,
    contains_target,
    creates_red_violation,
    cycle,
    explicit,
    find_target_witness,
    longest_path_order,
    longest_path_vertices,
    matching,
    parse_target,
    path,
    star,
)
from .painters import blocking_painter, random_color, random_painter, scripted_painter
from .solver import (
    Solver,
    UnknownAbove,
    builder_wins_within,
    candidate_moves,
    online_ramsey_number,
)
from .verify import (
    AuditViolation,
    PainterAudit,
    VerificationReport,
    audit_blocking_painter,
    star_path_targets,
    verify_lower_exhaustive,
    verify_upper,
)

__all__ = [name for name in dir() if not name.startswith("_")]
