"""Sifting stage: screen every alternative against the basic-attribute thresholds.

An alternative survives iff it satisfies every threshold; each failure is
recorded as an audit entry.  One pass suffices because an alternative's fate
depends only on its own values, never on the rest of the field.
"""

from __future__ import annotations

from .model import DecisionTask, Elimination, SiftResult
from .values import satisfies_threshold


def psp(task: DecisionTask) -> SiftResult:
    """Primary sifting pass: keep alternatives meeting all basic thresholds.

    Survivors keep their input order.  Eliminations list every failing
    (alternative, attribute, threshold, value) tuple, not just the first, so
    rejection reasons are fully auditable.
    """
    feasible: list[str] = []
    eliminations: list[Elimination] = []
    for alt in task.alternatives:
        failures = [
            Elimination(alt.id, t.attribute_id, t, alt.values[t.attribute_id])
            for t in task.thresholds
            if not satisfies_threshold(alt.values[t.attribute_id], t)
        ]
        if failures:
            eliminations.extend(failures)
        else:
            feasible.append(alt.id)
    return SiftResult(feasible=tuple(feasible), eliminations=tuple(eliminations))
