"""Command-line front end.

Commands: ``decide`` (sift + ladder search with a full trace), ``compare``
(run the ladder engine against the baseline choosers), ``validate`` (check
scenario files), ``batch`` (sweep generated tasks against the brute-force
reference).

Exit codes: 0 a plan was chosen / all files valid / sweep agreed;
1 usage, parse or validation error; 2 abstain; 3 repartition or no unique
choice; 4 engine/reference disagreement in ``batch``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Callable, Optional

from .baselines import THEORIES, compare_theories
from .ladder import DominanceMode, decide_task
from .model import DecisionTask, Verdict
from .oracle import brute_force_lt, random_task
from .scenario import ScenarioError, outcome_to_json, parse_scenario

_VERDICT_EXIT = {
    Verdict.CHOSEN: 0,
    Verdict.ABSTAIN: 2,
    Verdict.REPARTITION: 3,
    Verdict.NO_UNIQUE_CHOICE: 3,
}


def _load(path: str) -> DecisionTask:
    text = Path(path).read_text(encoding="utf-8")
    return parse_scenario(text)


def _mode(value: str) -> DominanceMode:
    return DominanceMode(value)


def cmd_decide(path: str, mode: DominanceMode, as_json: bool) -> int:
    task = _load(path)
    sifted, outcome = decide_task(task, mode)

    if as_json:
        doc = outcome_to_json(outcome)
        doc["task_id"] = task.task_id
        doc["feasible"] = list(sifted.feasible)
        doc["eliminations"] = [
            {
                "alternative": e.alternative_id,
                "attribute": e.attribute_id,
                "threshold": str(e.threshold),
                "value": str(e.value),
            }
            for e in sifted.eliminations
        ]
        print(json.dumps(doc, indent=2, ensure_ascii=False))
        return _VERDICT_EXIT[outcome.verdict]

    for e in sifted.eliminations:
        print(f"eliminated {e.alternative_id} | attribute {e.attribute_id} | {e.threshold} | value {e.value}")
    print(f"feasible [{','.join(sifted.feasible)}]")
    for record in outcome.trace:
        attrs = ",".join(str(a) for a in sorted(record.attribute_ids))
        print(
            f"level {record.r} | attrs {{{attrs}}}"
            f" | before [{','.join(record.survivors_before)}]"
            f" | after [{','.join(record.survivors_after)}]"
        )
    if outcome.verdict is Verdict.CHOSEN:
        print(f"Chosen: {outcome.chosen}")
    else:
        print(outcome.verdict.value)
    return _VERDICT_EXIT[outcome.verdict]


def cmd_compare(
    path: str,
    theories: list[str],
    pt_risk_attr: Optional[int],
    it_profit_attr: Optional[int],
    it_budget: int,
    mode: DominanceMode,
) -> int:
    unknown = [t for t in theories if t not in THEORIES]
    if unknown:
        print(f"error: unknown theory {unknown[0]!r} (expected lt, pt, it)", file=sys.stderr)
        return 1
    if "pt" in theories and pt_risk_attr is None:
        print("error: pt requested without --pt-risk-attr", file=sys.stderr)
        return 1
    task = _load(path)
    rows = compare_theories(
        task,
        theories=theories,
        pt_risk_attr=pt_risk_attr,
        it_profit_attr=it_profit_attr,
        it_budget=it_budget,
        mode=mode,
    )
    for row in rows:
        print(f"{row.theory}: {row.chosen if row.status == 'chosen' else row.status}")
    return 0


def cmd_validate(paths: list[str]) -> int:
    ok = True
    for path in paths:
        try:
            _load(path)
        except FileNotFoundError:
            print(f"{path}: error: file not found", file=sys.stderr)
            ok = False
        except ScenarioError as exc:
            ok = False
            if exc.violations:
                for violation in exc.violations:
                    print(f"{path}: {exc.category}: {violation}", file=sys.stderr)
            else:
                print(f"{path}: {exc}", file=sys.stderr)
        else:
            print(f"{path}: ok")
    return 0 if ok else 1


EngineFn = Callable[[DecisionTask, DominanceMode], tuple[str, Optional[str]]]


def _engine_verdict(task: DecisionTask, mode: DominanceMode) -> tuple[str, Optional[str]]:
    _, outcome = decide_task(task, mode)
    return (outcome.verdict.value, outcome.chosen)


def run_batch(
    seed: int,
    count: int,
    mode: DominanceMode = DominanceMode.GLOBAL,
    engine: EngineFn = _engine_verdict,
) -> tuple[int, str]:
    """Sweep generated tasks through the engine and the naive reference.

    Returns (exit code, report).  The ``engine`` hook exists so the harness
    itself can be checked: swapping in a broken engine must be caught.
    """
    agreements = 0
    for index in range(count):
        task_seed = seed + index
        dims = random.Random(task_seed ^ 0x5EED)
        task = random_task(
            task_seed,
            n_alternatives=dims.randint(1, 6),
            n_attributes=dims.randint(1, 5),
            n_levels=dims.randint(1, 3),
        )
        got = engine(task, mode)
        expected = brute_force_lt(task, mode.value)
        if got != expected:
            return (4, f"disagreement at seed {task_seed}: engine={got} reference={expected}")
        agreements += 1
    return (0, f"{agreements}/{count} agree")


def cmd_batch(seed: int, count: int, mode: DominanceMode) -> int:
    code, report = run_batch(seed, count, mode)
    print(report)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ladderchoice", description="Threshold-sift and ladder-search decision engine.")
    sub = parser.add_subparsers(dest="command", required=True)

    decide = sub.add_parser("decide", help="evaluate a scenario file and print the trace")
    decide.add_argument("path")
    decide.add_argument("--mode", choices=[m.value for m in DominanceMode], default="global")
    decide.add_argument("--json", action="store_true", dest="as_json")

    compare = sub.add_parser("compare", help="run the engine and baseline choosers side by side")
    compare.add_argument("path")
    compare.add_argument("--theories", default=",".join(THEORIES))
    compare.add_argument("--pt-risk-attr", type=int, default=None)
    compare.add_argument("--it-profit-attr", type=int, default=None)
    compare.add_argument("--it-budget", type=int, default=0)
    compare.add_argument("--mode", choices=[m.value for m in DominanceMode], default="global")

    validate = sub.add_parser("validate", help="parse and validate scenario files")
    validate.add_argument("paths", nargs="+")

    batch = sub.add_parser("batch", help="sweep generated tasks against the naive reference")
    batch.add_argument("--seed", type=int, default=1)
    batch.add_argument("--count", type=int, default=1000)
    batch.add_argument("--mode", choices=[m.value for m in DominanceMode], default="global")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "decide":
            return cmd_decide(args.path, _mode(args.mode), args.as_json)
        if args.command == "compare":
            theories = [t.strip() for t in args.theories.split(",") if t.strip()]
            return cmd_compare(
                args.path, theories, args.pt_risk_attr, args.it_profit_attr, args.it_budget, _mode(args.mode)
            )
        if args.command == "validate":
            return cmd_validate(args.paths)
        return cmd_batch(args.seed, args.count, _mode(args.mode))
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return 1
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
