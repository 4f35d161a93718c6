"""Rewrite the golden CLI outputs: ``python -m tests.golden.regen``.

Review the diff before committing; the expected files are the contract.
"""
import io
from pathlib import Path

from zs2x2.cli import main

HERE = Path(__file__).parent
GAMES = sorted((HERE / "games").glob("*.json"))

COMMANDS = {
    "solve.txt": ["solve", "--verify"],
    "solve.json": ["solve", "--format", "machine"],
    "leader.txt": ["leader"],
    "leader.csv": ["leader", "--samples", "8"],
    "br1.txt": ["br", "--player", "1", "--prob", "1/2"],
    "br2.txt": ["br", "--player", "2", "--prob", "1/2"],
}


def run(args):
    buf = io.StringIO()
    code = main(args, out=buf)
    return code, buf.getvalue()


def golden_cases():
    for game in GAMES:
        for suffix, cmd in COMMANDS.items():
            yield game, suffix, cmd[:1] + [str(game)] + cmd[1:]


if __name__ == "__main__":
    for game, suffix, args in golden_cases():
        code, text = run(args)
        assert code == 0, (game, suffix)
        (HERE / "expected" / f"{game.stem}.{suffix}").write_text(text, encoding="utf-8")
