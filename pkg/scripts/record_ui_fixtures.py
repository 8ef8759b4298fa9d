"""Record real websocket message logs for the frontend replay tests.

Runs the two scripted games against the live service (in-process) and dumps
both directions of traffic as JSON, so the UI tests replay genuine wire
data rather than hand-written approximations.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from ramseylab.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"


def record(create_payload: dict, color: str) -> list[dict]:
    log: list[dict] = []
    client = TestClient(create_app())
    with client.websocket_connect("/ws") as ws:
        msg = {"type": "create", **create_payload}
        log.append({"dir": "send", "msg": msg})
        ws.send_json(msg)
        sid = None
        while True:
            received = ws.receive_json()
            log.append({"dir": "recv", "msg": received})
            if received["type"] == "created":
                sid = received["session"]
            elif received["type"] == "terminal":
                break
            elif received["type"] == "propose":
                reply = {"type": "color", "session": sid, "color": color}
                log.append({"dir": "send", "msg": reply})
                ws.send_json(reply)
    return log


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    games = {
        "extend-pair-all-blue.json": (
            {"role": "painter",
             "target": {"red": {"kind": "path", "size": 3},
                        "blue": {"kind": "path", "size": 4}},
             "engine": "extend-pair", "params": {"k": 3, "n": 4}, "budget": 14},
            "blue"),
        "star-extend-all-red.json": (
            {"role": "painter",
             "target": {"red": {"kind": "star", "size": 3},
                        "blue": {"kind": "path", "size": 4}},
             "engine": "star-extend", "params": {"k": 3, "seed_blue_path": 3},
             "budget": 3},
            "red"),
    }
    for name, (payload, color) in games.items():
        log = record(payload, color)
        out = FIXTURES / name
        out.write_text(json.dumps(log, indent=2, sort_keys=True) + "\n")
        print(f"wrote {out} ({len(log)} messages)")


if __name__ == "__main__":
    main()
