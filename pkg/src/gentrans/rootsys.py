"""Root systems, Weyl groups and weight multiplicities.

Everything is exact integer arithmetic. Cartan matrices use Bourbaki node
numbering with ``C[i][j] = <alpha_i, alpha_j^vee>``, so a root with simple-root
coordinates ``c`` has fundamental-weight coordinates ``c^T C``.

Internally the work is done by :class:`RootData`, which accepts any Cartan
matrix, including reducible ones. That is how Levi subsystems are handled.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
import re

from .errors import BudgetExceeded, InvalidInput

Root = tuple[int, ...]
Weight = tuple[int, ...]
Cartan = tuple[tuple[int, ...], ...]

SERIES = ("A", "B", "C", "D", "E", "F", "G")
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True, order=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise InvalidInput(f"unknown series {self.series!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidInput(f"rank must be an integer, got {self.rank!r}")
        if self.series in _EXCEPTIONAL_RANKS:
            if self.rank not in _EXCEPTIONAL_RANKS[self.series]:
                raise InvalidInput(f"no exceptional type {self.series}{self.rank}")
        elif self.rank < _MIN_RANK[self.series]:
            raise InvalidInput(
                f"type {self.series} needs rank >= {_MIN_RANK[self.series]}, got {self.rank}"
            )

    @classmethod
    def parse(cls, text: str, rank: int | str | None = None) -> LieType:
        """Build a type from ``"E6"``, ``"A 5"`` or ``("A", 5)``."""
        text = str(text).strip().upper()
        if rank not in (None, "", "-"):
            try:
                rank = int(rank)
            except (TypeError, ValueError):
                raise InvalidInput(f"bad rank {rank!r}") from None
            if re.fullmatch(r"[A-G]", text):
                return cls(text, rank)
            m = re.fullmatch(r"([A-G])(\d+)", text)
            if m and int(m.group(2)) == rank:
                return cls(m.group(1), rank)
            raise InvalidInput(f"bad type {text!r} with rank {rank}")
        m = re.fullmatch(r"([A-G])_?\s*(\d+)", text)
        if not m:
            raise InvalidInput(f"bad type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    @property
    def exceptional(self) -> bool:
        return self.series in _EXCEPTIONAL_RANKS

    def __str__(self):
        return f"{self.series}{self.rank}"


def _bond(C: list[list[int]], i: int, j: int, a: int = -1, b: int = -1) -> None:
    C[i - 1][j - 1] = a
    C[j - 1][i - 1] = b


@lru_cache(maxsize=None)
def cartan_matrix(t: LieType) -> Cartan:
    l = t.rank
    C = [[2 if i == j else 0 for j in range(l)] for i in range(l)]
    s = t.series
    if s in "ABCD":
        path = l if s != "D" else l - 1
        for i in range(1, path):
            _bond(C, i, i + 1)
        if s == "B":
            _bond(C, l - 1, l, -2, -1)
        elif s == "C":
            _bond(C, l - 1, l, -1, -2)
        elif s == "D":
            _bond(C, l - 2, l)
    elif s == "E":
        for i, j in [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, l)]:
            _bond(C, i, j)
    elif s == "F":
        _bond(C, 1, 2)
        _bond(C, 2, 3, -2, -1)
        _bond(C, 3, 4)
    else:
        _bond(C, 1, 2, -1, -3)
    return tuple(map(tuple, C))


def _symmetrizer(C: Cartan) -> tuple[int, ...]:
    """Smallest positive integers d with C[i][j] d_j = C[j][i] d_i."""
    n = len(C)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and C[i][j] and d[j] is None:
                    d[j] = d[i] * C[j][i] / C[i][j]
                    queue.append(j)
    scale = lcm(*(x.denominator for x in d))
    return tuple(int(x * scale) for x in d)


class RootData:
    """Root system attached to an arbitrary (possibly reducible) Cartan matrix."""

    def __init__(self, cartan: Cartan):
        self.cartan = tuple(map(tuple, cartan))
        self.rank = len(self.cartan)
        for i, row in enumerate(self.cartan):
            if len(row) != self.rank or row[i] != 2:
                raise InvalidInput("not a Cartan matrix")
        self.d = _symmetrizer(self.cartan) if self.rank else ()
        self.rho = (1,) * self.rank

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        # Grow by heights using root strings: beta + alpha_j is a root iff
        # q > 0 where p - q = <beta, alpha_j^vee>.
        n, C = self.rank, self.cartan
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        layer = simple
        while layer:
            nxt = set()
            for beta in layer:
                for j in range(n):
                    pairing = sum(beta[i] * C[i][j] for i in range(n))
                    p, down = 0, list(beta)
                    while True:
                        down[j] -= 1
                        if tuple(down) not in found:
                            break
                        p += 1
                    if p - pairing > 0:
                        up = list(beta)
                        up[j] += 1
                        nxt.add(tuple(up))
            found |= nxt
            layer = sorted(nxt)
        return tuple(sorted(found, key=lambda r: (sum(r), r)))

    @cached_property
    def root_weights(self) -> tuple[Weight, ...]:
        return tuple(self.to_weight(r) for r in self.positive_roots)

    def to_weight(self, root) -> Weight:
        n, C = self.rank, self.cartan
        return tuple(sum(root[i] * C[i][j] for i in range(n)) for j in range(n))

    def pair(self, weight, root) -> int:
        """Scaled inner product (weight, root) with the integer symmetrizer."""
        return sum(c * d * a for c, d, a in zip(root, self.d, weight))

    @cached_property
    def weyl_order(self) -> int:
        # Exponents are the partition dual to the counts of roots per height.
        counts: dict[int, int] = {}
        for r in self.positive_roots:
            counts[sum(r)] = counts.get(sum(r), 0) + 1
        order = 1
        for m in counts:
            order *= (m + 1) ** (counts[m] - counts.get(m + 1, 0))
        return order

    def sub(self, nodes) -> RootData:
        nodes = sorted(nodes)
        return root_data(tuple(tuple(self.cartan[i][j] for j in nodes) for i in nodes))

    def stabilizer_order(self, weight) -> int:
        return self.sub([i for i, a in enumerate(weight) if a == 0]).weyl_order

    def orbit_size(self, weight) -> int:
        return self.weyl_order // self.stabilizer_order(self.dominant(weight)[0])

    def dominant(self, weight) -> tuple[Weight, int]:
        """Dominant conjugate of ``weight`` and the parity of the reflections used."""
        x = list(weight)
        C, sign = self.cartan, 1
        while True:
            for i, a in enumerate(x):
                if a < 0:
                    row = C[i]
                    for j in range(self.rank):
                        x[j] -= a * row[j]
                    sign = -sign
                    break
            else:
                return tuple(x), sign

    def orbit(self, weight) -> list[Weight]:
        start = self.dominant(weight)[0]
        seen = {start}
        stack = [start]
        C = self.cartan
        while stack:
            x = stack.pop()
            for i, a in enumerate(x):
                if a > 0:
                    y = tuple(x[j] - a * C[i][j] for j in range(self.rank))
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        return sorted(seen, reverse=True)

    def weyl_dim(self, hw) -> int:
        num = den = 1
        for root in self.positive_roots:
            num *= sum(c * d * (a + 1) for c, d, a in zip(root, self.d, hw))
            den *= sum(c * d for c, d in zip(root, self.d))
        return num // den

    def dominant_weights(self, hw, limit: int | None = None) -> dict[Weight, Root]:
        """Dominant weights of E(hw), mapped to the root coordinates of hw - mu.

        Raises BudgetExceeded once more than ``limit`` weights are found.
        """
        hw = tuple(hw)
        out = {hw: (0,) * self.rank}
        queue = deque([hw])
        pairs = list(zip(self.positive_roots, self.root_weights))
        while queue:
            mu = queue.popleft()
            depth = out[mu]
            for root, w in pairs:
                nu = tuple(a - b for a, b in zip(mu, w))
                if min(nu, default=0) >= 0 and nu not in out:
                    out[nu] = tuple(a + b for a, b in zip(depth, root))
                    queue.append(nu)
                    if limit is not None and len(out) > limit:
                        raise BudgetExceeded(f"more than {limit} dominant weights below {hw}")
        return out

    def dominant_multiplicities(self, hw) -> dict[Weight, int]:
        hw = tuple(hw)
        depths = self.dominant_weights(hw)
        order = sorted(depths, key=lambda mu: (sum(depths[mu]), mu))
        mult = {hw: 1}
        pairs = list(zip(self.positive_roots, self.root_weights))
        for mu in order[1:]:
            k = depths[mu]
            denom = sum(ki * di * (a + b + 2) for ki, di, a, b in zip(k, self.d, hw, mu))
            total = 0
            for root, w in pairs:
                nu = list(mu)
                while True:
                    for j in range(self.rank):
                        nu[j] += w[j]
                    m = mult.get(self.dominant(nu)[0], 0)
                    if not m:
                        break
                    total += m * self.pair(nu, root)
            value, rem = divmod(2 * total, denom)
            if rem:
                raise ArithmeticError(f"non-integral multiplicity at {mu}")
            mult[mu] = value
        return {mu: m for mu, m in mult.items() if m}



@lru_cache(maxsize=None)
def root_data(cartan: Cartan) -> RootData:
    return RootData(cartan)


def _data(t) -> RootData:
    if isinstance(t, RootData):
        return t
    return root_data(cartan_matrix(t))


def _check_weight(data: RootData, hw, dominant=True) -> Weight:
    hw = tuple(hw)
    if len(hw) != data.rank:
        raise InvalidInput(f"weight {hw} has length {len(hw)}, expected {data.rank}")
    if not all(isinstance(a, int) for a in hw):
        raise InvalidInput(f"weight {hw} must have integer coordinates")
    if dominant and min(hw, default=0) < 0:
        raise InvalidInput(f"weight {hw} is not dominant")
    return hw


def positive_roots(t) -> tuple[Root, ...]:
    """Positive roots in simple-root coordinates, sorted by height then lexicographically."""
    return _data(t).positive_roots


def root_to_weight(t, root) -> Weight:
    data = _data(t)
    if len(root) != data.rank:
        raise InvalidInput(f"root {tuple(root)} has wrong length")
    return data.to_weight(root)


def highest_root(t) -> Root:
    return _data(t).positive_roots[-1]


def dim_group(t) -> int:
    data = _data(t)
    return data.rank + 2 * len(data.positive_roots)


def weyl_group_order(t) -> int:
    return _data(t).weyl_order


def epsilon(t: LieType, i: int) -> int:
    """The diagram involution induced by -w_0."""
    l = t.rank
    if not 1 <= i <= l:
        raise InvalidInput(f"node {i} out of range for {t}")
    if t.series == "A":
        return l + 1 - i
    if t.series == "D" and l % 2 == 1 and i >= l - 1:
        return 2 * l - 1 - i
    if t == LieType("E", 6):
        return {1: 6, 6: 1, 3: 5, 5: 3}.get(i, i)
    return i


def dual_weight(t: LieType, hw) -> Weight:
    hw = _check_weight(_data(t), hw, dominant=False)
    out = [0] * t.rank
    for i, a in enumerate(hw, start=1):
        out[epsilon(t, i) - 1] = a
    return tuple(out)


def weyl_dim(t, hw) -> int:
    data = _data(t)
    return data.weyl_dim(_check_weight(data, hw))


def dominant_conjugate(t, weight) -> Weight:
    data = _data(t)
    return data.dominant(_check_weight(data, weight, dominant=False))[0]


def weyl_orbit(t, weight) -> list[Weight]:
    data = _data(t)
    return data.orbit(_check_weight(data, weight, dominant=False))


def orbit_size(t, weight) -> int:
    data = _data(t)
    return data.orbit_size(_check_weight(data, weight, dominant=False))


def freudenthal_multiplicities(t, hw) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of E(hw)."""
    data = _data(t)
    return _dominant_mults(data, _check_weight(data, hw))


def weight_multiplicities(t, hw) -> dict[Weight, int]:
    """Multiplicities of every weight of E(hw)."""
    data = _data(t)
    return _all_mults(data, _check_weight(data, hw))


@lru_cache(maxsize=4096)
def _dominant_mults(data: RootData, hw: Weight) -> dict[Weight, int]:
    return data.dominant_multiplicities(hw)


@lru_cache(maxsize=512)
def _all_mults(data: RootData, hw: Weight) -> dict[Weight, int]:
    out = {}
    for mu, m in _dominant_mults(data, hw).items():
        for nu in data.orbit(mu):
            out[nu] = m
    return out


def fundamental_weight(t, i: int) -> Weight:
    n = _data(t).rank
    if not 1 <= i <= n:
        raise InvalidInput(f"node {i} out of range")
    return tuple(int(j == i - 1) for j in range(n))
