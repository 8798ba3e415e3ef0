"""Generic transitivity degrees of simple groups on their maximal flag varieties.

Three quantities per type and node:

* ``gtd_flag``  gtd of G acting on G/P_i,
* ``gtd_levi``  gtd of the Levi factor L_i acting on the opposite radical,
* ``gtd_group`` gtd of G, the maximum of ``gtd_flag`` over the nodes.

Type A is computed from the closed formulas (checked against the quiver
decider). When P_i is conjugate to its opposite, ``gtd_flag = 2 + gtd_levi``.
The rest comes from :data:`REFERENCE_DATA`, a literal table of published
values which :mod:`gentrans.verify` cross-checks against every consistency
relation it knows.
"""
from __future__ import annotations

import copy
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidInput, OutsideTableRange
from .quiver import gtd_G_typeA, gtd_levi_typeA
from .rootsys import LieType, epsilon

_TABLE_MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}


class Action(str, Enum):
    GROUP_ON_FLAG = "GroupOnFlag"
    LEVI_ON_RADICAL = "LeviOnRadical"
    GROUP_GLOBAL = "GroupGlobal"


class Provenance(str, Enum):
    COMPUTED_TYPE_A = "ComputedTypeA"
    CONJUGACY_RELATION = "ConjugacyRelation"
    REFERENCE_DATA = "ReferenceData"


@dataclass(frozen=True)
class GtdRecord:
    type: LieType
    node: int | None
    action: Action
    value: int
    provenance: Provenance

    def as_dict(self) -> dict:
        return {
            "type": str(self.type),
            "node": self.node,
            "action": self.action.value,
            "value": self.value,
            "provenance": self.provenance.value,
        }


# Node classes for the classical series: "1", "l", "spin/even", "spin/odd",
# "other"; exceptional types are keyed by node number.
REFERENCE_DATA = {
    "levi": {
        "B": {"1": 1, "l": 1, "other": 0},
        "C": {"1": 1, "l": 1, "other": 0},
        "D": {"1": 1, "spin/even": 1, "spin/odd": 2, "other": 0},
        "E6": {"1": 2, "2": 0, "3": 1, "4": 0, "5": 1, "6": 2},
        "E7": {"1": 0, "2": 0, "3": 0, "4": 0, "5": 0, "6": 0, "7": 1},
        "E8": {"1": 0, "2": 0, "3": 0, "4": 0, "5": 0, "6": 0, "7": 0, "8": 0},
        "F4": {"1": 0, "2": 0, "3": 0, "4": 0},
        "G2": {"1": 0, "2": 0},
    },
    "flag": {
        "D": {"spin/odd": 3},
        "E6": {"1": 4, "3": 2, "5": 2, "6": 4},
    },
}


def check_table_range(t: LieType, i: int | None = None) -> None:
    if t.rank < _TABLE_MIN_RANK.get(t.series, 0):
        raise OutsideTableRange(f"{t} is below the tabulated rank range")
    if i is not None and not (isinstance(i, int) and 1 <= i <= t.rank):
        raise InvalidInput(f"node {i} out of range for {t}")


def table_types(max_rank: int = 8) -> list[LieType]:
    """Tabulated types: classical series up to ``max_rank``, then the exceptional ones."""
    out = []
    for s in "ABCD":
        out += [LieType(s, l) for l in range(_TABLE_MIN_RANK[s], max_rank + 1)]
    out += [LieType("E", 6), LieType("E", 7), LieType("E", 8), LieType("F", 4), LieType("G", 2)]
    return out


def _node_classes(t: LieType, i: int) -> list[str]:
    if t.exceptional:
        return [str(i)]
    l = t.rank
    keys = []
    if t.series == "D" and i >= l - 1:
        keys.append("spin/even" if l % 2 == 0 else "spin/odd")
    if i == 1:
        keys.append("1")
    if i == l:
        keys.append("l")
    return keys + ["other"]


def _lookup(reference: dict, action: str, t: LieType, i: int) -> int | None:
    table = reference[action].get(str(t) if t.exceptional else t.series, {})
    for key in _node_classes(t, i):
        if key in table:
            return table[key]
    return None


def gtd_levi(t: LieType, i: int, reference: dict | None = None) -> GtdRecord:
    """gtd of L_i on the opposite unipotent radical (equivalently on G/P_i)."""
    check_table_range(t, i)
    if t.series == "A":
        return GtdRecord(t, i, Action.LEVI_ON_RADICAL, gtd_levi_typeA(t.rank, i),
                         Provenance.COMPUTED_TYPE_A)
    value = _lookup(reference or REFERENCE_DATA, "levi", t, i)
    if value is None:
        raise KeyError(f"no reference entry for the Levi action at {t}, node {i}")
    return GtdRecord(t, i, Action.LEVI_ON_RADICAL, value, Provenance.REFERENCE_DATA)


def gtd_flag(t: LieType, i: int, reference: dict | None = None) -> GtdRecord:
    """gtd of G acting on G/P_i."""
    check_table_range(t, i)
    if t.series == "A":
        return GtdRecord(t, i, Action.GROUP_ON_FLAG, gtd_G_typeA(t.rank, i),
                         Provenance.COMPUTED_TYPE_A)
    if epsilon(t, i) == i:
        value = 2 + gtd_levi(t, i, reference).value
        return GtdRecord(t, i, Action.GROUP_ON_FLAG, value, Provenance.CONJUGACY_RELATION)
    value = _lookup(reference or REFERENCE_DATA, "flag", t, i)
    if value is None:
        raise KeyError(f"no reference entry for the flag action at {t}, node {i}")
    return GtdRecord(t, i, Action.GROUP_ON_FLAG, value, Provenance.REFERENCE_DATA)


def gtd_group(t: LieType, reference: dict | None = None) -> GtdRecord:
    check_table_range(t)
    best = max((gtd_flag(t, i, reference) for i in range(1, t.rank + 1)),
               key=lambda r: r.value)
    return GtdRecord(t, None, Action.GROUP_GLOBAL, best.value, best.provenance)


def open_triple(t: LieType, i: int, reference: dict | None = None) -> bool:
    """Whether G has an open orbit on (G/P_i)^3."""
    return gtd_flag(t, i, reference).value >= 3


def levi_open_orbit(t: LieType, i: int, reference: dict | None = None) -> bool:
    """Whether L_i has an open orbit on the opposite radical."""
    return gtd_levi(t, i, reference).value >= 1


def borel_gtd(t: LieType) -> int:
    """gtd of G on G/B: PGL_2 is 3-transitive on the projective line, all others give 2."""
    return 3 if t == LieType("A", 1) else 2


def with_override(action: str, key: str, node_class: str, value: int,
                  reference: dict | None = None) -> dict:
    """Copy of the reference table with one entry replaced, for fault injection."""
    ref = copy.deepcopy(reference or REFERENCE_DATA)
    if action not in ref:
        raise KeyError(f"unknown reference action {action!r}")
    ref[action].setdefault(key, {})[node_class] = value
    return ref
