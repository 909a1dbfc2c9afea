#!/usr/bin/env python3
"""Generate frontend test fixtures from the real play service and engine.

Writes:
  tests/fixtures/session_allblue_l7.json  descriptor sequence of an all-Blue
                                          painter session at l=7
  tests/fixtures/replay_l7.json           a finished transcript plus the
                                          engine's per-step edge sets
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from online_ramsey import apply_move, new_game, transcript_from_json
from online_ramsey.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def session_fixture() -> dict:
    app = create_app(max_l=20)
    snapshots = []
    with TestClient(app) as client:
        doc = client.post("/sessions", json={"l": 7, "role": "painter"}).json()
        sid = doc["id"]
        snapshots.append(doc)
        while not doc["closed"]:
            doc = client.post(f"/sessions/{sid}/move", json={"color": "B"}).json()
            snapshots.append(doc)
        transcript = client.get(f"/sessions/{sid}/transcript").json()
    return {"snapshots": snapshots, "transcript": transcript}


def replay_fixture(transcript: dict) -> dict:
    moves, targets, cap, status = transcript_from_json(transcript)
    state = new_game(targets)
    steps = []
    for rec in moves:
        state = apply_move(state, rec.u, rec.v, rec.color)
        edges = sorted([u, v, c.letter] for u, v, c in state.board.edges())
        steps.append({"edges": edges, "status": state.status.value})
    return {"transcript": transcript, "steps": steps}


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    session = session_fixture()
    (FIXTURES / "session_allblue_l7.json").write_text(
        json.dumps(session, indent=1), encoding="utf-8"
    )
    (FIXTURES / "replay_l7.json").write_text(
        json.dumps(replay_fixture(session["transcript"]), indent=1), encoding="utf-8"
    )
    print(f"wrote fixtures under {FIXTURES}")


if __name__ == "__main__":
    main()
