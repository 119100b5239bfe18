"""Command-line entry point for batch use of the workbench.

Exit codes: 0 on success, 1 on domain errors (bad cakes, construction
failures, illegal gameplays), 2 on usage errors.  All values print as
exact rationals; identical arguments and input files produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import cake as cakemod
from . import conjectures, constructions, engine, solver, tactics


class DomainError(Exception):
    pass


def _load_cake(path: str) -> cakemod.Cake:
    try:
        return cakemod.load(path)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    except cakemod.CakeError as exc:
        raise DomainError(f"{path}: {exc}") from exc


def _apply_play(state: engine.GameState, play: Optional[str]) -> engine.GameState:
    if not play:
        return state
    try:
        ids = [int(tok) for tok in play.split(",") if tok.strip()]
    except ValueError:
        raise DomainError(f"bad --play prefix {play!r}") from None
    for cid in ids:
        try:
            state = engine.apply_move(state, cid)
        except engine.EngineError as exc:
            raise DomainError(f"--play prefix illegal: {exc}") from exc
    return state


def cmd_solve(args) -> int:
    c = _load_cake(args.cake)
    print(solver.minimax(c))
    return 0


def cmd_moves(args) -> int:
    c = _load_cake(args.cake)
    state = _apply_play(engine.initial_state(c), args.play)
    if state.is_over:
        raise DomainError("no moves: the game is over at this position")
    rec = solver.Solver(c).record(state)
    print(f"mover {state.mover.value}")
    print(f"value {rec.value}")
    print(f"optimal {' '.join(str(m) for m in sorted(rec.optimal_moves))}")
    return 0


def cmd_simulate(args) -> int:
    c = _load_cake(args.cake)
    try:
        alice = tactics.tactic_from_name(args.alice, c)
        bob = tactics.tactic_from_name(args.bob, c)
    except (ValueError, tactics.AnnotationError) as exc:
        raise DomainError(str(exc)) from exc
    try:
        moves = engine.simulate(c, alice, bob)
    except (engine.EngineError, tactics.CarefulGreedyFail) as exc:
        raise DomainError(str(exc)) from exc
    a, b = engine.scores(c, moves)
    print(engine.format_gameplay(moves))
    print(f"alice {a}")
    print(f"bob {b}")
    return 0


def cmd_construct(args) -> int:
    try:
        built, _ = constructions.from_spec(args.spec)
    except constructions.ConstructionError as exc:
        raise DomainError(str(exc)) from exc
    cakemod.save(built, args.output)
    print(f"wrote {args.output}: {len(built)} cherries")
    return 0


def cmd_validate(args) -> int:
    try:
        with open(args.cake, "r", encoding="ascii") as f:
            text = f.read()
    except OSError as exc:
        raise DomainError(f"cannot read {args.cake}: {exc}") from exc
    try:
        c = cakemod.parse(text, validated=False)
    except cakemod.CakeParseError as exc:
        raise DomainError(str(exc)) from exc
    report = cakemod.validate(c)
    if report.ok:
        print("ok")
        return 0
    for v in report.violations:
        print(f"{v.kind} {' '.join(str(i) for i in v.ids)}")
    return 1


_CHECKERS = {
    "greedy": conjectures.check_greedy_move,
    "strong": conjectures.check_strong_greedy,
    "noreveal": conjectures.check_no_reveal,
}


def cmd_check(args) -> int:
    c = _load_cake(args.cake)
    try:
        report = _CHECKERS[args.conjecture](c)
    except cakemod.TooLargeError as exc:
        raise DomainError(str(exc)) from exc
    if args.json:
        import json

        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return 0


def cmd_search(args) -> int:
    result = conjectures.search_no_reveal_counterexample(args.seed, args.budget)
    if result is None:
        print("none")
        return 0
    print(f"found after {result.attempts} attempts")
    print(f"non-revealing move {result.non_revealing_move}")
    print(
        f"bob optimal {result.root_value}, after the move {result.value_after_move}"
    )
    print(
        f"alice optimal {result.alice_optimal}, via non-reveal {result.alice_after_move}"
    )
    print(cakemod.serialize(result.cake), end="")
    if args.output:
        cakemod.save(result.cake, args.output)
    return 0


def _gamma_generator(gen: str, seed: int):
    """Cake stream for the ratio scan: a named construction or random cakes."""
    if gen.startswith("random:"):
        parts = gen.split(":")
        if len(parts) != 3:
            raise DomainError("random generator spec is random:<n>:<reds>")
        n, reds = int(parts[1]), int(parts[2])
        if n % 2 == 0:
            raise DomainError("ratio scan needs odd-sized cakes")
        return conjectures.random_cakes(seed, n=n, reds=reds)
    try:
        built, _ = constructions.from_spec(gen)
    except constructions.ConstructionError as exc:
        raise DomainError(str(exc)) from exc
    return iter([built])


def cmd_scan(args) -> int:
    if args.target != "gamma":
        raise DomainError(f"unknown scan target {args.target!r}")
    result = solver.ratio_scan(_gamma_generator(args.gen, args.seed), args.budget)
    if result is None:
        print("none")
        return 0
    print(f"best ratio {result.ratio} (value {result.value}) over {result.examined} cakes")
    print(cakemod.serialize(result.cake), end="")
    return 0


def cmd_replay(args) -> int:
    c = _load_cake(args.cake)
    try:
        with open(args.gameplay, "r", encoding="ascii") as f:
            moves = engine.parse_gameplay(f.read())
    except OSError as exc:
        raise DomainError(f"cannot read {args.gameplay}: {exc}") from exc
    except ValueError as exc:
        raise DomainError(f"bad gameplay file: {exc}") from exc
    try:
        a, b = engine.scores(c, moves)
    except engine.IllegalGameplayError as exc:
        raise DomainError(str(exc)) from exc
    print(f"alice {a}")
    print(f"bob {b}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    host, _, port = args.addr.rpartition(":")
    if not host or not port.isdigit():
        raise DomainError(f"--addr must be host:port, got {args.addr!r}")
    uvicorn.run(create_app(), host=host, port=int(port), log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grabgame",
        description="Exact workbench for the convex grabbing game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="print the minimax value of a cake")
    p.add_argument("cake")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("moves", help="optimal move set at a position")
    p.add_argument("cake")
    p.add_argument("--play", help="comma-separated move prefix applied first")
    p.set_defaults(fn=cmd_moves)

    p = sub.add_parser("simulate", help="play two tactics against each other")
    p.add_argument("cake")
    p.add_argument("--alice", required=True)
    p.add_argument("--bob", required=True)
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("construct", help="write a validated construction")
    p.add_argument("spec", help="sun:<k> | moon:<n> | sun+red:<k> | moon+red:<n>")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("validate", help="check a cake file for violations")
    p.add_argument("cake")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("check", help="run a conjecture checker over a cake")
    p.add_argument("conjecture", choices=sorted(_CHECKERS))
    p.add_argument("cake")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("search", help="hunt for a no-reveal counterexample")
    p.add_argument("target", choices=["noreveal"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("scan", help="exploratory minimax-to-red-count ratio scan")
    p.add_argument("target", choices=["gamma"])
    p.add_argument("--gen", required=True, help="construction spec or random:<n>:<reds>")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("replay", help="replay a gameplay file and print scores")
    p.add_argument("cake")
    p.add_argument("gameplay")
    p.set_defaults(fn=cmd_replay)

    p = sub.add_parser("serve", help="run the interactive session service")
    p.add_argument("--addr", default="127.0.0.1:8421")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
