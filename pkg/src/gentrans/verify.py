"""Consistency checks over every tabulated type and node.

Each check returns a :class:`Check` with the relation it tests and an anchor
naming where that relation lives in the classification. ``run_checks`` is the
engine behind ``gentrans verify``; passing a modified reference table (see
:func:`gentrans.gtd.with_override`) is how fault injection is exercised.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import random

from . import gtd as G
from .parabolic import is_abelian_radical, levi_structure, levi_summands
from .quiver import (euler_sign_open, has_open_orbit_uniform, m_li,
                     quiver_gtd_typeA, reflect, s_li, tits_form)
from .rootsys import (LieType, dim_group, dominant_conjugate, epsilon,
                      fundamental_weight, weyl_dim)
from .tensor import count_system_solutions, invariant_dim, tensor_decompose

# Published node lists and group degrees, kept apart from the reference table
# used to compute them so that a corrupted entry surfaces as a mismatch.


def published_table1(t: LieType) -> int:
    if t.series == "A":
        return t.rank + 2
    return {"B": 3, "C": 3, "D": 3, "E6": 4, "E7": 3}.get(
        t.series if not t.exceptional else str(t), 2)


def published_table3(t: LieType) -> set[int]:
    l = t.rank
    return {
        "A": set(range(1, l + 1)), "B": {1, l}, "C": {1, l}, "D": {1, l - 1, l},
        "E6": {1, 6}, "E7": {7},
    }.get(str(t) if t.exceptional else t.series, set())


def published_table4(t: LieType) -> set[int]:
    l = t.rank
    return {
        "A": set(range(1, l + 1)), "B": {1, l}, "C": {1, l}, "D": {1, l - 1, l},
        "E6": {1, 3, 5, 6}, "E7": {7},
    }.get(str(t) if t.exceptional else t.series, set())


def dim_group_closed_form(t: LieType) -> int:
    l = t.rank
    return {
        "A": l * (l + 2), "B": l * (2 * l + 1), "C": l * (2 * l + 1), "D": l * (2 * l - 1),
        "E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14,
    }[str(t) if t.exceptional else t.series]


@dataclass
class Check:
    name: str
    anchor: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, what: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(what)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "cases": self.cases,
            "passed": self.passed,
            "failures": self.failures[:10],
        }


def _nodes(t):
    return range(1, t.rank + 1)


def _safe(check: Check, fn, *args):
    try:
        return fn(*args)
    except Exception as exc:
        check.failures.append(f"{fn.__name__}{args}: {type(exc).__name__}: {exc}")
        return None


def check_tables(types, ref) -> list[Check]:
    t1 = Check("table-1-equals-max-of-table-2", "table 1")
    t3 = Check("table-3-threshold-set", "table 3")
    t4 = Check("table-4-threshold-set", "table 4")
    for t in types:
        try:
            flags = {i: G.gtd_flag(t, i, ref).value for i in _nodes(t)}
            levis = {i: G.gtd_levi(t, i, ref).value for i in _nodes(t)}
        except Exception as exc:  # a broken entry should fail its check, not the run
            t1.failures.append(f"{t}: {type(exc).__name__}: {exc}")
            continue
        t1.expect(max(flags.values()) == published_table1(t),
                  f"{t}: max flag {max(flags.values())} != {published_table1(t)}")
        got3 = {i for i, v in flags.items() if v >= 3}
        t3.expect(got3 == published_table3(t), f"{t}: {sorted(got3)} != {sorted(published_table3(t))}")
        got4 = {i for i, v in levis.items() if v >= 1}
        t4.expect(got4 == published_table4(t), f"{t}: {sorted(got4)} != {sorted(published_table4(t))}")
    return [t1, t3, t4]


def check_gtd_relations(types, ref) -> list[Check]:
    sym = Check("epsilon-symmetry", "opposite parabolics")
    conj = Check("conjugacy-relation", "gtd(G:G/P) = 2 + gtd(L:u) when P ~ P-")
    lower = Check("flag-at-least-two", "gtd(G:G/P) >= 2")
    bound = Check("dimension-bound", "gtd * dim X <= dim of the acting group")
    abel = Check("abelian-radical-implication", "abelian radical has finitely many L-orbits")
    small = Check("small-levi-vanishing", "dim L < dim U forces gtd(L:u) = 0")
    borel = Check("borel-lower-bound", "gtd(G:G/B) <= gtd(G:G/P)")
    for t in types:
        try:
            flag = {i: G.gtd_flag(t, i, ref).value for i in _nodes(t)}
            levi = {i: G.gtd_levi(t, i, ref).value for i in _nodes(t)}
        except Exception as exc:
            conj.failures.append(f"{t}: {type(exc).__name__}: {exc}")
            continue
        dim_G = dim_group(t)
        for i in _nodes(t):
            e = epsilon(t, i)
            sym.expect(flag[i] == flag[e] and levi[i] == levi[e],
                       f"{t} node {i} vs {e}: flag {flag[i]}/{flag[e]}, levi {levi[i]}/{levi[e]}")
            if e == i:
                conj.expect(flag[i] == 2 + levi[i], f"{t} node {i}: {flag[i]} != 2 + {levi[i]}")
            conj.expect(flag[i] >= 1 + levi[i], f"{t} node {i}: {flag[i]} < 1 + {levi[i]}")
            lower.expect(flag[i] >= 2, f"{t} node {i}: {flag[i]}")
            s = levi_structure(t, i)
            bound.expect(flag[i] * s.dim_U <= dim_G, f"{t} node {i}: {flag[i]}*{s.dim_U} > {dim_G}")
            bound.expect(levi[i] * s.dim_U <= s.dim_L, f"{t} node {i}: {levi[i]}*{s.dim_U} > {s.dim_L}")
            if is_abelian_radical(t, i):
                abel.expect(levi[i] >= 1, f"{t} node {i}: abelian but {levi[i]}")
            if s.dim_L < s.dim_U:
                small.expect(levi[i] == 0, f"{t} node {i}: {levi[i]}")
            borel.expect(G.borel_gtd(t) <= flag[i], f"{t} node {i}: {flag[i]}")
    return [sym, conj, lower, bound, abel, small, borel]


def check_structure(types) -> list[Check]:
    eps = Check("epsilon-is-minus-w0", "table 6")
    dims = Check("dimension-identity", "dim G = dim L + 2 dim U")
    summ = Check("levi-summand-dimensions", "irreducible L-summands of u")
    for t in types:
        dims.expect(dim_group(t) == dim_group_closed_form(t), f"{t}: dim G {dim_group(t)}")
        for i in _nodes(t):
            w = fundamental_weight(t, i)
            star = dominant_conjugate(t, tuple(-a for a in w))
            e = epsilon(t, i)
            eps.expect(star == fundamental_weight(t, e) and epsilon(t, e) == i, f"{t} node {i}")
            s = levi_structure(t, i)
            dims.expect(s.dim_L + 2 * s.dim_U == dim_group(t), f"{t} node {i}")
            parts = _safe(summ, levi_summands, t, i)
            if parts is not None:
                summ.expect(sum(p.dim for p in parts) == s.dim_U, f"{t} node {i}")
    return [eps, dims, summ]


def check_quiver(max_rank: int) -> list[Check]:
    path = Check("type-A-quiver-path", "table 2, type A")
    sign = Check("decider-equals-euler-sign", "open orbit iff positive Tits form")
    form = Check("m-s-formulas", "m_li and s_li")
    tits = Check("tits-form-invariance", "fundamental reflections")
    for l in range(1, max(max_rank, 12) + 1):
        for i in range(1, l + 1):
            if l <= max_rank:
                path.expect(quiver_gtd_typeA(l, i) == m_li(l, i), f"A{l} node {i}")
            for d in range(1, 13):
                sign.expect(has_open_orbit_uniform(d, l + 1, i) == euler_sign_open(d, l + 1, i),
                            f"d={d} n={l + 1} a={i}")
            j = l + 1 - i
            form.expect(m_li(l, i) == m_li(l, j) and s_li(l, i) == s_li(l, j), f"A{l} node {i}")
            form.expect(m_li(l, i) >= 3, f"A{l} node {i}")
            if 2 * i != l + 1:
                form.expect(s_li(l, i) is not None and 1 + s_li(l, i) <= m_li(l, i), f"A{l} node {i}")
            else:
                form.expect(s_li(l, i) is None and m_li(l, i) == 3, f"A{l} node {i}")
    rng = random.Random(0)
    for _ in range(2000):
        d = rng.randint(1, 6)
        alpha = tuple(rng.randint(0, 20) for _ in range(d + 1))
        i = rng.randint(1, d + 1)
        tits.expect(tits_form(d, reflect(d, i, alpha)) == tits_form(d, alpha), f"{d} {i} {alpha}")
    return [path, sign, form, tits]


def check_tensor() -> list[Check]:
    book = Check("tensor-dimension-bookkeeping", "Klimyk formula")
    system = Check("pairing-system-count", "invariants of four E6 factors")
    D4, D5, E6 = LieType("D", 4), LieType("D", 5), LieType("E", 6)
    for t, a, b in [(D4, (0, 0, 0, 1), (0, 0, 0, 1)), (D5, (0, 0, 0, 0, 1), (0, 0, 0, 0, 1)),
                    (E6, (1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0)), (LieType("G", 2), (1, 1), (0, 1))]:
        m = tensor_decompose(t, a, b)
        book.expect(m.dim(t) == weyl_dim(t, a) * weyl_dim(t, b), f"{t} {a} x {b}")
    for n in [(1, 1, 1, 1), (2, 2, 1, 1), (1, 1, 2, 2), (2, 1, 2, 1), (0, 0, 0, 0), (2, 2, 2, 2)]:
        got = invariant_dim(E6, [(k, 0, 0, 0, 0, 0) for k in n])
        system.expect(got == count_system_solutions(*n), f"n={n}: {got}")
    return [book, system]


def run_checks(max_rank: int = 8, reference: dict | None = None) -> list[Check]:
    ref = reference or G.REFERENCE_DATA
    types = G.table_types(max_rank)
    checks = []
    checks += check_tables(types, ref)
    checks += check_gtd_relations(types, ref)
    checks += check_structure(types)
    checks += check_quiver(max_rank)
    checks += check_tensor()
    return checks
