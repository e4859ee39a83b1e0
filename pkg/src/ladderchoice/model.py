"""Domain types for discrete multi-attribute choice tasks.

A task bundles a set of attributes, a group of "basic" attributes screened
against acceptance thresholds, a partition of "dominance" attributes into
importance levels, and the alternatives to choose between.  All types are
immutable after construction; local field sanity is enforced by the
constructors, while cross-object consistency is reported (never raised) by
:func:`validate_task`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional, Union

ORDINAL_LABELS = ("very_low", "low", "moderate", "high", "very_high")
ORDINAL_LEVELS = {label: i + 1 for i, label in enumerate(ORDINAL_LABELS)}

NUMERIC_KINDS = ("crisp", "interval", "at_least")


@dataclass(frozen=True)
class AttributeValue:
    """Tagged value an alternative can take on one attribute.

    Exactly one of five shapes: a crisp number, a closed interval, an open
    lower bound ("at least x"), an ordinal level on the fixed 1..5 scale, or
    a categorical label.  Use the module factories :func:`crisp`,
    :func:`interval`, :func:`at_least`, :func:`ordinal` and :func:`category`
    rather than the raw constructor.
    """

    kind: str
    lo: Optional[float] = None
    hi: Optional[float] = None
    level: Optional[int] = None
    label: Optional[str] = None

    def __post_init__(self) -> None:
        if self.kind == "crisp":
            if self.lo is None or not math.isfinite(self.lo):
                raise ValueError("crisp value must be a finite number")
        elif self.kind == "interval":
            if self.lo is None or self.hi is None:
                raise ValueError("interval needs both bounds")
            if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
                raise ValueError("interval bounds must be finite")
            if self.lo > self.hi:
                raise ValueError(f"interval lower bound {self.lo} exceeds upper bound {self.hi}")
        elif self.kind == "at_least":
            if self.lo is None or not math.isfinite(self.lo):
                raise ValueError("at_least needs a finite lower bound")
        elif self.kind == "ordinal":
            if self.level not in (1, 2, 3, 4, 5):
                raise ValueError(f"ordinal level must be in 1..5, got {self.level!r}")
        elif self.kind == "category":
            if not self.label:
                raise ValueError("category needs a non-empty label")
        else:
            raise ValueError(f"unknown value kind {self.kind!r}")

    @property
    def is_numeric(self) -> bool:
        return self.kind in NUMERIC_KINDS

    def bounds(self) -> tuple[float, float]:
        """Numeric values as a (lo, hi) pair; crisp is degenerate, at_least is unbounded above."""
        if self.kind == "crisp":
            return (self.lo, self.lo)
        if self.kind == "interval":
            return (self.lo, self.hi)
        if self.kind == "at_least":
            return (self.lo, math.inf)
        raise ValueError(f"{self.kind} value has no numeric bounds")

    def __str__(self) -> str:
        if self.kind == "crisp":
            return format_number(self.lo)
        if self.kind == "interval":
            return f"[{format_number(self.lo)},{format_number(self.hi)}]"
        if self.kind == "at_least":
            return f">={format_number(self.lo)}"
        if self.kind == "ordinal":
            return f"ordinal({self.level})"
        return f"category({self.label})"


def format_number(x: float) -> str:
    """Render a number without a trailing '.0' when it is integral."""
    if isinstance(x, float) and x.is_integer() and math.isfinite(x):
        return str(int(x))
    return str(x)


def crisp(x: float) -> AttributeValue:
    return AttributeValue("crisp", lo=float(x))


def interval(lo: float, hi: float) -> AttributeValue:
    return AttributeValue("interval", lo=float(lo), hi=float(hi))


def at_least(x: float) -> AttributeValue:
    return AttributeValue("at_least", lo=float(x))


def ordinal(level_or_label: Union[int, str]) -> AttributeValue:
    """Build an ordinal value from a level (1..5) or a canonical scale label."""
    if isinstance(level_or_label, str):
        if level_or_label not in ORDINAL_LEVELS:
            raise ValueError(f"unknown ordinal label {level_or_label!r}")
        return AttributeValue("ordinal", level=ORDINAL_LEVELS[level_or_label])
    return AttributeValue("ordinal", level=level_or_label)


def category(label: str) -> AttributeValue:
    return AttributeValue("category", label=label)


def values_equal(a: AttributeValue, b: AttributeValue) -> bool:
    """Semantic equality: numeric shapes agree on bounds, ordinals on level, categories on label.

    A crisp number equals the degenerate interval with the same endpoints.
    Values of different families are never equal.
    """
    if a.is_numeric and b.is_numeric:
        return a.bounds() == b.bounds()
    if a.kind == "ordinal" and b.kind == "ordinal":
        return a.level == b.level
    if a.kind == "category" and b.kind == "category":
        return a.label == b.label
    return False


@dataclass(frozen=True)
class Attribute:
    """One criterion of the task: numeric, ordinal (1..5 scale) or categorical.

    Polarity records which direction is preferable: cost (smaller is better),
    benefit (larger is better), or none for categorical attributes.
    """

    id: int
    name: str
    kind: str
    polarity: str
    unit: Optional[str] = None
    labels: Optional[dict[str, int]] = None  # extra ordinal labels -> level, beyond the built-in five

    def __post_init__(self) -> None:
        if not isinstance(self.id, int) or self.id <= 0:
            raise ValueError(f"attribute id must be a positive integer, got {self.id!r}")
        if self.kind not in ("numeric", "ordinal", "categorical"):
            raise ValueError(f"unknown attribute kind {self.kind!r}")
        if self.kind == "categorical":
            if self.polarity != "none":
                raise ValueError(f"categorical attribute {self.id} must have polarity 'none'")
        elif self.polarity not in ("cost", "benefit"):
            raise ValueError(f"attribute {self.id} ({self.kind}) needs polarity 'cost' or 'benefit'")
        if self.labels is not None:
            for lab, lvl in self.labels.items():
                if lvl not in (1, 2, 3, 4, 5):
                    raise ValueError(f"label {lab!r} maps to level {lvl!r}, expected 1..5")


THRESHOLD_OPS = ("max", "min", "min_level", "max_level", "allowed")

# which predicate ops make sense for which attribute kind
_OPS_FOR_KIND = {
    "numeric": ("max", "min"),
    "ordinal": ("min_level", "max_level"),
    "categorical": ("allowed",),
}


@dataclass(frozen=True)
class Threshold:
    """Acceptance predicate on one attribute.

    Ops: ``max``/``min`` bound a numeric value, ``min_level``/``max_level``
    bound an ordinal level, ``allowed`` lists admissible category labels.
    """

    attribute_id: int
    op: str
    bound: Union[float, int, frozenset[str]] = 0.0

    def __post_init__(self) -> None:
        if self.op not in THRESHOLD_OPS:
            raise ValueError(f"unknown threshold op {self.op!r}")
        if self.op in ("max", "min"):
            if not isinstance(self.bound, (int, float)) or not math.isfinite(self.bound):
                raise ValueError(f"{self.op} threshold needs a finite numeric bound")
            object.__setattr__(self, "bound", float(self.bound))
        elif self.op in ("min_level", "max_level"):
            if self.bound not in (1, 2, 3, 4, 5):
                raise ValueError(f"{self.op} threshold needs a level in 1..5, got {self.bound!r}")
        else:
            labels = frozenset(self.bound)
            if not labels or not all(isinstance(lab, str) for lab in labels):
                raise ValueError("allowed threshold needs a non-empty set of labels")
            object.__setattr__(self, "bound", labels)

    def __str__(self) -> str:
        if self.op == "allowed":
            return f"allowed {{{','.join(sorted(self.bound))}}}"
        return f"{self.op} {format_number(self.bound)}"


@dataclass(frozen=True)
class DominancePartition:
    """Dominance attributes grouped into importance levels, least important first.

    ``levels[0]`` is the least important group and ``levels[-1]`` the most
    important one; the ladder search walks them top-down.  Disjointness across
    levels is a task invariant checked by :func:`validate_task`.
    """

    levels: tuple[frozenset[int], ...]

    def __init__(self, levels) -> None:
        normalized = tuple(frozenset(level) for level in levels)
        if not normalized:
            raise ValueError("partition needs at least one level")
        if any(not level for level in normalized):
            raise ValueError("partition levels must be non-empty")
        object.__setattr__(self, "levels", normalized)

    @property
    def level_count(self) -> int:
        return len(self.levels)

    def level(self, r: int) -> frozenset[int]:
        """Attribute ids at importance rank ``r`` (1 = least important)."""
        return self.levels[r - 1]

    def all_ids(self) -> frozenset[int]:
        return frozenset().union(*self.levels)


@dataclass(frozen=True)
class Alternative:
    """A candidate plan: an id plus one value per task attribute."""

    id: str
    values: dict[int, AttributeValue]

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("alternative needs a non-empty id")


@dataclass(frozen=True)
class DecisionTask:
    """A full choice task: attributes, screening thresholds, importance ladder, alternatives.

    ``basic_ids`` names the attributes screened during sifting; ``thresholds``
    must cover exactly those ids.  ``partition`` groups the dominance
    attributes; the two id sets may overlap or coincide.  ``aspiration``
    optionally sets the accept/abstain standard applied when sifting leaves a
    single alternative, restricted to the top partition level.
    """

    task_id: str
    attributes: tuple[Attribute, ...]
    basic_ids: frozenset[int]
    thresholds: tuple[Threshold, ...]
    partition: DominancePartition
    alternatives: tuple[Alternative, ...]
    aspiration: Optional[tuple[Threshold, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "basic_ids", frozenset(self.basic_ids))
        object.__setattr__(
            self, "thresholds", tuple(sorted(self.thresholds, key=lambda t: t.attribute_id))
        )
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        if self.aspiration is not None:
            object.__setattr__(
                self, "aspiration", tuple(sorted(self.aspiration, key=lambda t: t.attribute_id))
            )

    @cached_property
    def _by_id(self) -> dict[int, Attribute]:
        return {a.id: a for a in self.attributes}

    def attribute(self, attribute_id: int) -> Attribute:
        return self._by_id[attribute_id]

    def attribute_ids(self) -> frozenset[int]:
        return frozenset(a.id for a in self.attributes)

    def alternative(self, alt_id: str) -> Alternative:
        for alt in self.alternatives:
            if alt.id == alt_id:
                return alt
        raise KeyError(alt_id)

    def ordinal_labels(self, attribute_id: int) -> dict[str, int]:
        """Label vocabulary for an ordinal attribute: the fixed scale plus declared extras."""
        vocab = dict(ORDINAL_LEVELS)
        attr = self._by_id.get(attribute_id)
        if attr is not None and attr.labels:
            vocab.update(attr.labels)
        return vocab


def alternatives_equal(a: Alternative, b: Alternative, attribute_ids) -> bool:
    """Whether two alternatives carry semantically equal values on every given attribute."""
    return all(values_equal(a.values[i], b.values[i]) for i in attribute_ids)


@dataclass(frozen=True)
class Elimination:
    """Audit record for one rejected (alternative, attribute) pair during sifting."""

    alternative_id: str
    attribute_id: int
    threshold: Threshold
    value: AttributeValue


@dataclass(frozen=True)
class SiftResult:
    """Outcome of the sifting stage: surviving ids in input order plus all eliminations."""

    feasible: tuple[str, ...]
    eliminations: tuple[Elimination, ...]

    def eliminated_ids(self) -> tuple[str, ...]:
        seen: list[str] = []
        for e in self.eliminations:
            if e.alternative_id not in seen:
                seen.append(e.alternative_id)
        return tuple(seen)


class Verdict(Enum):
    CHOSEN = "Chosen"
    ABSTAIN = "Abstain"
    REPARTITION = "Repartition"
    NO_UNIQUE_CHOICE = "NoUniqueChoice"


@dataclass(frozen=True)
class LevelRecord:
    """Trace entry for one ladder level: which ids entered and which survived."""

    r: int
    attribute_ids: frozenset[int]
    survivors_before: tuple[str, ...]
    survivors_after: tuple[str, ...]


@dataclass(frozen=True)
class LadderOutcome:
    """Final verdict of the ladder search plus its per-level trace."""

    verdict: Verdict
    chosen: Optional[str] = None
    trace: tuple[LevelRecord, ...] = ()

    def __post_init__(self) -> None:
        if (self.verdict is Verdict.CHOSEN) != (self.chosen is not None):
            raise ValueError("chosen id is set exactly when the verdict is Chosen")


@dataclass(frozen=True)
class Violation:
    """One validator finding; ``code`` is stable, ``message`` is for humans."""

    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


def _value_kind_matches(attr: Attribute, value: AttributeValue) -> bool:
    if attr.kind == "numeric":
        return value.is_numeric
    if attr.kind == "ordinal":
        return value.kind == "ordinal"
    return value.kind == "category"


def _threshold_kind_matches(attr: Attribute, t: Threshold) -> bool:
    return t.op in _OPS_FOR_KIND[attr.kind]


def validate_task(task: DecisionTask) -> list[Violation]:
    """Check every cross-object task invariant; returns findings instead of raising.

    An empty list means the task is well-formed: unique ids, thresholds
    covering exactly the basic attributes with matching kinds, disjoint
    partition levels referencing known attributes, basic and dominance sets
    jointly covering every attribute, aspiration restricted to the top level,
    complete kind-consistent value vectors, and no two alternatives with
    completely equal value vectors.
    """
    violations: list[Violation] = []

    ids_seen: set[int] = set()
    for attr in task.attributes:
        if attr.id in ids_seen:
            violations.append(Violation("duplicate-attribute-id", f"attribute id {attr.id} declared twice"))
        ids_seen.add(attr.id)
    all_ids = frozenset(ids_seen)

    for aid in sorted(task.basic_ids):
        if aid not in all_ids:
            violations.append(Violation("unknown-reference", f"basic attribute {aid} is not declared"))

    partition_ids: set[int] = set()
    for index, level in enumerate(task.partition.levels, start=1):
        overlap = partition_ids & level
        if overlap:
            violations.append(
                Violation(
                    "partition-overlap",
                    f"level {index} repeats attribute id(s) {sorted(overlap)} from an earlier level",
                )
            )
        partition_ids |= level
        for aid in sorted(level):
            if aid not in all_ids:
                violations.append(
                    Violation("unknown-reference", f"partition level {index} references undeclared attribute {aid}")
                )

    uncovered = all_ids - (task.basic_ids | partition_ids)
    if uncovered:
        violations.append(
            Violation(
                "coverage",
                f"attribute id(s) {sorted(uncovered)} belong to neither the basic set nor the partition",
            )
        )

    thresholded = [t.attribute_id for t in task.thresholds]
    if len(set(thresholded)) != len(thresholded):
        dupes = sorted({aid for aid in thresholded if thresholded.count(aid) > 1})
        violations.append(Violation("threshold-coverage", f"multiple thresholds for attribute(s) {dupes}"))
    missing = task.basic_ids - set(thresholded)
    if missing:
        violations.append(Violation("threshold-coverage", f"basic attribute(s) {sorted(missing)} lack a threshold"))
    extra = set(thresholded) - task.basic_ids
    if extra:
        violations.append(Violation("threshold-coverage", f"threshold(s) on non-basic attribute(s) {sorted(extra)}"))

    for t in task.thresholds:
        attr = task._by_id.get(t.attribute_id)
        if attr is not None and not _threshold_kind_matches(attr, t):
            violations.append(
                Violation(
                    "kind-mismatch",
                    f"threshold '{t}' does not fit {attr.kind} attribute {attr.id} ({attr.name})",
                )
            )

    if task.aspiration is not None:
        top = task.partition.levels[-1]
        for t in task.aspiration:
            if t.attribute_id not in top:
                violations.append(
                    Violation(
                        "aspiration-level",
                        f"aspiration threshold on attribute {t.attribute_id} is outside the top level {sorted(top)}",
                    )
                )
            attr = task._by_id.get(t.attribute_id)
            if attr is not None and not _threshold_kind_matches(attr, t):
                violations.append(
                    Violation("kind-mismatch", f"aspiration threshold '{t}' does not fit attribute {t.attribute_id}")
                )

    alt_ids_seen: set[str] = set()
    for alt in task.alternatives:
        if alt.id in alt_ids_seen:
            violations.append(Violation("duplicate-alternative-id", f"alternative id {alt.id!r} declared twice"))
        alt_ids_seen.add(alt.id)

        missing_values = all_ids - set(alt.values)
        if missing_values:
            violations.append(
                Violation("missing-value", f"alternative {alt.id!r} lacks value(s) for attribute(s) {sorted(missing_values)}")
            )
        extra_values = set(alt.values) - all_ids
        if extra_values:
            violations.append(
                Violation("unknown-reference", f"alternative {alt.id!r} has value(s) for undeclared attribute(s) {sorted(extra_values)}")
            )
        for aid in sorted(set(alt.values) & all_ids):
            attr = task._by_id[aid]
            if not _value_kind_matches(attr, alt.values[aid]):
                violations.append(
                    Violation(
                        "kind-mismatch",
                        f"alternative {alt.id!r} carries a {alt.values[aid].kind} value on {attr.kind} attribute {aid}",
                    )
                )

    # complete-equality screen over basic + dominance attributes
    relevant = (task.basic_ids | partition_ids) & all_ids
    comparable = [
        alt
        for alt in task.alternatives
        if all(aid in alt.values and _value_kind_matches(task._by_id[aid], alt.values[aid]) for aid in relevant)
    ]
    for i, first in enumerate(comparable):
        for second in comparable[i + 1 :]:
            if alternatives_equal(first, second, relevant):
                violations.append(
                    Violation(
                        "duplicate-alternative",
                        f"alternatives {first.id!r} and {second.id!r} are completely equal on every screened attribute",
                    )
                )

    return violations
