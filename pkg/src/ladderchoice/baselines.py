"""Baseline choosers: a prospect-theory proxy and an image-theory screen-and-rank.

Two fidelities of prospect theory live here.  The quantitative layer is the
standard two-outcome value/weighting machinery (power value function with
loss aversion, inverse-S probability weighting); the comparison harness never
uses it.  The qualitative layer is :func:`pt_proxy_choose`: under a gain
frame a risk-averse chooser simply minimizes a designated risk attribute
across all alternatives, with no sifting stage.

The image-theory chooser screens alternatives by counting basic-threshold
violations against a rejection budget, then ranks survivors on one
explicitly designated quantitative attribute.  It never auto-selects that
attribute: with no designation, or with tied/incomparable survivors, it
reports Undecidable.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .ladder import DominanceMode, decide_task
from .model import DecisionTask, Verdict
from .values import PartialOrdering, compare_values, satisfies_threshold


@dataclass(frozen=True)
class PtParams:
    """Curvature, loss-aversion and weighting parameters.

    Defaults are the conventional experimentally estimated constants
    (0.88, 0.88, 2.25, 0.61, 0.69); they are configuration, not results.
    """

    alpha: float = 0.88
    beta: float = 0.88
    loss_aversion: float = 2.25
    gamma: float = 0.61
    delta: float = 0.69

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "loss_aversion", "gamma", "delta"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")
        if self.loss_aversion < 1:
            warnings.warn("loss_aversion below 1 models loss tolerance, not aversion", stacklevel=2)


class UnsupportedLotteryError(ValueError):
    """Raised for lotteries outside the supported two-outcome form."""


@dataclass(frozen=True)
class Lottery:
    """Finite lottery as (payoff, probability) pairs; probabilities sum to one."""

    outcomes: tuple[tuple[float, float], ...]

    def __init__(self, outcomes) -> None:
        pairs = tuple((float(x), float(p)) for x, p in outcomes)
        if any(not 0.0 <= p <= 1.0 for _, p in pairs):
            raise ValueError("probabilities must lie in [0, 1]")
        if abs(sum(p for _, p in pairs) - 1.0) > 1e-9:
            raise ValueError("probabilities must sum to 1")
        object.__setattr__(self, "outcomes", pairs)


def pt_value(x: float, params: PtParams = PtParams()) -> float:
    """Reference-dependent value: x^alpha on gains, -loss_aversion*(-x)^beta on losses."""
    if x >= 0:
        return x**params.alpha
    return -params.loss_aversion * (-x) ** params.beta


def pt_weight(prob: float, gamma: float) -> float:
    """Inverse-S probability weight p^g / (p^g + (1-p)^g)^(1/g); fixes 0 and 1."""
    if not 0.0 <= prob <= 1.0:
        raise ValueError(f"probability out of range: {prob}")
    if prob in (0.0, 1.0):
        return prob
    num = prob**gamma
    return num / (num + (1.0 - prob) ** gamma) ** (1.0 / gamma)


def cpt_evaluate(lottery: Lottery, params: PtParams = PtParams()) -> float:
    """Separable two-outcome evaluation: sum of w(p)*v(x), gains weighted by gamma, losses by delta."""
    nonzero = [(x, p) for x, p in lottery.outcomes if x != 0.0]
    if len(nonzero) > 2:
        raise UnsupportedLotteryError("only lotteries with at most two nonzero outcomes are supported")
    total = 0.0
    for x, p in nonzero:
        g = params.gamma if x >= 0 else params.delta
        total += pt_weight(p, g) * pt_value(x, params)
    return total


@dataclass(frozen=True)
class BaselineResult:
    """Chooser outcome: a chosen id, or None with a reason when undecidable."""

    chosen: str | None
    detail: str = ""

    @property
    def undecidable(self) -> bool:
        return self.chosen is None


def _unique_best(candidate_ids, attribute_id: int, task: DecisionTask) -> BaselineResult:
    """The id strictly better than every rival on one attribute, else Undecidable."""
    polarity = task.attribute(attribute_id).polarity
    alts = {cid: task.alternative(cid) for cid in candidate_ids}
    for cid in candidate_ids:
        if all(
            compare_values(alts[cid].values[attribute_id], alts[other].values[attribute_id], polarity)
            is PartialOrdering.BETTER
            for other in candidate_ids
            if other != cid
        ):
            return BaselineResult(cid)
    return BaselineResult(None, f"no alternative is strictly best on attribute {attribute_id}")


def pt_proxy_choose(task: DecisionTask, risk_attribute_id: int) -> BaselineResult:
    """Risk-minimizing chooser: the unique best value on a designated risk attribute.

    The designated attribute must be an ordinal or numeric cost; the scan
    covers all alternatives, since this chooser has no sifting stage.  Ties
    or incomparable values yield Undecidable.
    """
    if risk_attribute_id not in task.attribute_ids():
        raise ValueError(f"risk attribute {risk_attribute_id} is not part of the task")
    attr = task.attribute(risk_attribute_id)
    if attr.kind == "categorical" or attr.polarity != "cost":
        raise ValueError(f"risk attribute must be an ordinal or numeric cost, got attribute {attr.id} ({attr.kind}/{attr.polarity})")
    if not task.alternatives:
        return BaselineResult(None, "no alternatives")
    return _unique_best([a.id for a in task.alternatives], risk_attribute_id, task)


def compatibility_screen(task: DecisionTask, rejection_budget: int = 0) -> tuple[str, ...]:
    """Ids of alternatives violating at most ``rejection_budget`` basic thresholds.

    A zero budget reproduces the sifting stage's feasible set exactly.
    """
    if rejection_budget < 0:
        raise ValueError("rejection_budget must be >= 0")
    return tuple(
        alt.id
        for alt in task.alternatives
        if sum(1 for t in task.thresholds if not satisfies_threshold(alt.values[t.attribute_id], t))
        <= rejection_budget
    )


def it_choose(
    task: DecisionTask,
    profit_attribute_id: int | None = None,
    rejection_budget: int = 0,
) -> BaselineResult:
    """Compatibility screen plus single-criterion profitability ranking.

    Alternatives with more than ``rejection_budget`` basic-threshold
    violations are dropped (budget 0 reproduces the sifting stage's feasible
    set).  Among survivors, the unique best on the designated numeric
    attribute wins; without a designated quantitative criterion, or when
    survivors tie, the chooser is Undecidable.
    """
    survivors = compatibility_screen(task, rejection_budget)
    if not survivors:
        return BaselineResult(None, "no alternative passes the compatibility screen")
    if profit_attribute_id is None:
        return BaselineResult(None, "no single quantitative criterion designated")
    if profit_attribute_id not in task.attribute_ids():
        raise ValueError(f"profitability attribute {profit_attribute_id} is not part of the task")
    if task.attribute(profit_attribute_id).kind != "numeric":
        return BaselineResult(None, f"attribute {profit_attribute_id} is not a quantitative criterion")
    if len(survivors) == 1:
        return BaselineResult(survivors[0])
    return _unique_best(survivors, profit_attribute_id, task)


THEORIES = ("lt", "pt", "it")


@dataclass(frozen=True)
class TheoryRow:
    """One comparison row: prediction status plus chosen id when there is one."""

    theory: str
    status: str  # chosen | undecidable | inapplicable | abstain | repartition | no-unique-choice
    chosen: str | None = None
    detail: str = ""


def compare_theories(
    task: DecisionTask,
    theories=THEORIES,
    pt_risk_attr: int | None = None,
    it_profit_attr: int | None = None,
    it_budget: int = 0,
    mode: DominanceMode = DominanceMode.GLOBAL,
) -> list[TheoryRow]:
    """Run the requested choosers on one task, one row per theory.

    The ladder engine always runs end to end.  The prospect proxy needs a
    designated risk attribute and is reported inapplicable without one; the
    image chooser runs its screen regardless and reports undecidable when no
    profitability criterion separates the survivors.
    """
    rows: list[TheoryRow] = []
    for theory in theories:
        if theory == "lt":
            _, outcome = decide_task(task, mode)
            if outcome.verdict is Verdict.CHOSEN:
                rows.append(TheoryRow("lt", "chosen", outcome.chosen))
            else:
                status = {
                    Verdict.ABSTAIN: "abstain",
                    Verdict.REPARTITION: "repartition",
                    Verdict.NO_UNIQUE_CHOICE: "no-unique-choice",
                }[outcome.verdict]
                rows.append(TheoryRow("lt", status))
        elif theory == "pt":
            if pt_risk_attr is None:
                rows.append(TheoryRow("pt", "inapplicable", detail="no risk attribute designated"))
            else:
                result = pt_proxy_choose(task, pt_risk_attr)
                if result.undecidable:
                    rows.append(TheoryRow("pt", "undecidable", detail=result.detail))
                else:
                    rows.append(TheoryRow("pt", "chosen", result.chosen))
        elif theory == "it":
            result = it_choose(task, it_profit_attr, it_budget)
            if result.undecidable:
                rows.append(TheoryRow("it", "undecidable", detail=result.detail))
            else:
                rows.append(TheoryRow("it", "chosen", result.chosen))
        else:
            raise ValueError(f"unknown theory {theory!r}")
    return rows
