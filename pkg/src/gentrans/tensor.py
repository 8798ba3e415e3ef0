"""Tensor products of irreducible modules and their invariants.

Decompositions use the Klimyk (Brauer) formula: for each weight nu of the
second factor, move ``hw1 + nu + rho`` to the dominant chamber by simple
reflections, drop it if it lands on a wall, otherwise add ``sign * mult`` at
the result minus rho.
"""
from __future__ import annotations

from itertools import combinations_with_replacement
import os

from .errors import BudgetExceeded, InvalidInput
from .rootsys import (LieType, Weight, _check_weight, _data, _all_mults, dual_weight,
                      fundamental_weight)

DEFAULT_BUDGET = 20_000_000
BUDGET_ENV = "GENTRANS_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInput(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidInput(f"{BUDGET_ENV} must be positive")
    return value


class ModuleSum:
    """Direct sum of irreducible modules, by highest weight."""

    def __init__(self, terms=None):
        self.terms: dict[Weight, int] = {}
        for hw, m in dict(terms or {}).items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} at {hw}")
            if m:
                self.terms[tuple(hw)] = m

    def __getitem__(self, hw) -> int:
        return self.terms.get(tuple(hw), 0)

    def __eq__(self, other):
        if isinstance(other, ModuleSum):
            return self.terms == other.terms
        return NotImplemented

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms, reverse=True))

    def items(self):
        return [(hw, self.terms[hw]) for hw in self]

    def dim(self, t) -> int:
        data = _data(t)
        return sum(m * data.weyl_dim(hw) for hw, m in self.terms.items())

    def __repr__(self):
        body = " + ".join(f"{m}*E{hw}" if m > 1 else f"E{hw}" for hw, m in self.items())
        return f"ModuleSum({body or '0'})"


class _Budget:
    def __init__(self, limit):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def remaining(self) -> int:
        return self.limit - self.used

    def spend(self, n: int) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(f"work budget of {self.limit} weight terms exceeded")


def _klimyk(data, module: dict[Weight, int], hw2: Weight, budget: _Budget) -> dict[Weight, int]:
    # Charge the budget from the dominant weights and orbit sizes before any
    # orbit is enumerated, so oversized requests fail fast.
    dominant = data.dominant_weights(hw2, limit=budget.remaining())
    budget.spend(len(dominant) * len(data.positive_roots))
    n_weights = sum(data.orbit_size(mu) for mu in dominant)
    budget.spend(len(module) * n_weights)
    weights = _all_mults(data, hw2)
    out: dict[Weight, int] = {}
    for lam, c in module.items():
        shifted = [a + 1 for a in lam]
        for nu, m in weights.items():
            x, sign = data.dominant([a + b for a, b in zip(shifted, nu)])
            if 0 in x:
                continue
            key = tuple(a - 1 for a in x)
            out[key] = out.get(key, 0) + sign * c * m
    out = {k: v for k, v in out.items() if v}
    if any(v < 0 for v in out.values()):
        raise ArithmeticError("negative multiplicity in tensor product")
    return out


def tensor_decompose(t, hw1, hw2, budget: int | None = None) -> ModuleSum:
    data = _data(t)
    hw1, hw2 = _check_weight(data, hw1), _check_weight(data, hw2)
    return ModuleSum(_klimyk(data, {hw1: 1}, hw2, _Budget(budget)))


def tensor_with(t, module: ModuleSum, hw, budget: int | None = None) -> ModuleSum:
    data = _data(t)
    hw = _check_weight(data, hw)
    return ModuleSum(_klimyk(data, module.terms, hw, _Budget(budget)))


def tensor_E6_vector(r: int, s: int) -> ModuleSum:
    """E(r w1) (x) E(s w1) for E6 by the closed rule over (a1, a2, a3, a4)."""
    if not (isinstance(r, int) and isinstance(s, int) and r >= 0 and s >= 0):
        raise InvalidInput(f"need nonnegative integers, got {(r, s)}")
    terms: dict[Weight, int] = {}
    for a3 in range(min(r, s) + 1):
        for a4 in range(min(r, s) - a3 + 1):
            a1, a2 = r - a3 - a4, s - a3 - a4
            hw = (a1 + a2, 0, a3, 0, 0, a4)
            terms[hw] = terms.get(hw, 0) + 1
    return ModuleSum(terms)


def invariant_dim(t, hws, budget: int | None = None) -> int:
    """Dimension of the invariants in E(hws[0]) (x) ... (x) E(hws[-1])."""
    data = _data(t)
    hws = [_check_weight(data, hw) for hw in hws]
    if not hws:
        raise InvalidInput("need at least one factor")
    if len(hws) == 1:
        return int(not any(hws[0]))
    spend = _Budget(budget)
    module = {hws[0]: 1}
    for hw in hws[1:-1]:
        module = _klimyk(data, module, hw, spend)
    return module.get(dual_weight(t, hws[-1]), 0)


def count_system_solutions(n1: int, n2: int, n3: int, n4: int) -> int:
    """Nonnegative integer solutions (a1..a4, b1..b4) of the pairing system."""
    if min(n1, n2, n3, n4) < 0:
        raise InvalidInput("need nonnegative n_j")
    count = 0
    # a3 = b3 = 0 is forced; a4 then fixes every other unknown
    for a4 in range(min(n1, n2) + 1):
        a1, a2 = n1 - a4, n2 - a4
        b4 = a1 + a2
        b1, b2 = n3 - b4, n4 - b4
        if min(b1, b2) >= 0 and a4 == b1 + b2:
            count += 1
    return count


def multiplicity_one_scan(t: LieType, i: int, d: int, bound: int,
                          budget: int | None = None) -> bool:
    """Whether every d-fold product of E(n_j w_i*) with n_j <= bound has invariants of dim <= 1.

    Factors commute, so each multiset of exponents is checked once.
    """
    return next(multiplicity_one_violations(t, i, d, bound, budget), None) is None


def multiplicity_one_violations(t: LieType, i: int, d: int, bound: int,
                                budget: int | None = None):
    """Sorted exponent tuples whose product has invariants of dimension > 1."""
    if d < 1 or bound < 0:
        raise InvalidInput("need d >= 1 and bound >= 0")
    w = dual_weight(t, fundamental_weight(t, i))
    for ns in combinations_with_replacement(range(bound + 1), d):
        if invariant_dim(t, [tuple(n * a for a in w) for n in ns], budget) > 1:
            yield ns


def e6_klimyk_witness(budget: int | None = None) -> int:
    """Multiplicity of E(2 w5) in E(2 w3) (x) E(2 w3) for E6."""
    t = LieType("E", 6)
    w3 = (0, 0, 2, 0, 0, 0)
    return tensor_decompose(t, w3, w3, budget)[(0, 0, 0, 0, 2, 0)]
