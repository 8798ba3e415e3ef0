"""Maximal parabolic subgroups, their Levi factors and unipotent radicals.

For a set of removed nodes the positive roots split into those of the Levi
factor (support avoids every removed node) and those of the radical. Grouping
radical roots by their coefficient on the removed node gives the Levi-stable
summands ``u_i^(b)``; each is irreducible with lowest-height root ``beta_0``
and highest weight ``-beta_0`` restricted to the Levi.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput
from .rootsys import LieType, RootData, Root, Weight, _data, dim_group


@dataclass(frozen=True)
class LeviStructure:
    type: LieType
    nodes: tuple[int, ...]
    components: tuple[LieType, ...]
    center_dim: int
    dim_L: int
    dim_U: int


@dataclass(frozen=True)
class LeviSummand:
    level: int
    lowest_root: Root
    highest_weight_full: Weight
    restricted_labels: Weight
    dim: int


def _removed(t: LieType, nodes) -> tuple[int, ...]:
    if isinstance(nodes, int):
        nodes = (nodes,)
    nodes = tuple(sorted(set(nodes)))
    if not nodes or not all(isinstance(i, int) and 1 <= i <= t.rank for i in nodes):
        raise InvalidInput(f"nodes {nodes} out of range for {t}")
    return nodes


def _components(C, keep: list[int]) -> list[list[int]]:
    left, comps = set(keep), []
    while left:
        stack = [min(left)]
        comp = []
        left.discard(stack[0])
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in list(left):
                if C[i][j]:
                    left.discard(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return sorted(comps)


def identify(data: RootData) -> LieType:
    """Cartan type of an irreducible root system, nodes in their given order.

    A rank-2 system with a double bond is called B2 when its first node is
    long and C2 otherwise, which keeps tails of B and C diagrams in series.
    """
    r, n = data.rank, len(data.positive_roots)
    bonds = max((-x for row in data.cartan for x in row if x < 0), default=0)
    if bonds <= 1:
        if n == r * (r + 1) // 2:
            return LieType("A", r)
        if n == r * (r - 1):
            return LieType("D", r)
        return LieType("E", r)
    if bonds == 3:
        return LieType("G", 2)
    if r == 4 and n == 24:
        return LieType("F", 4)
    long = [i for i, d in enumerate(data.d) if d == max(data.d)]
    if r == 2:
        return LieType("B" if long == [0] else "C", 2)
    return LieType("B" if len(long) == r - 1 else "C", r)


def levi_structure(t: LieType, nodes) -> LeviStructure:
    """Levi type and dimensions of the parabolic attached to the removed ``nodes``."""
    removed = _removed(t, nodes)
    data = _data(t)
    keep = [i for i in range(t.rank) if i + 1 not in removed]
    comps = tuple(identify(data.sub(c)) for c in _components(data.cartan, keep))
    levi_roots = sum(1 for r in data.positive_roots if not any(r[i - 1] for i in removed))
    dim_U = len(data.positive_roots) - levi_roots
    return LeviStructure(
        type=t,
        nodes=removed,
        components=comps,
        center_dim=len(removed),
        dim_L=t.rank + 2 * levi_roots,
        dim_U=dim_U,
    )


def levi_summands(t: LieType, i: int) -> list[LeviSummand]:
    """Irreducible summands of the radical of the maximal parabolic at node ``i``."""
    (i,) = _removed(t, i)
    data = _data(t)
    levels: dict[int, list[Root]] = {}
    for r in data.positive_roots:
        if r[i - 1]:
            levels.setdefault(r[i - 1], []).append(r)
    levi = data.sub([j for j in range(t.rank) if j != i - 1])
    out = []
    for b in sorted(levels):
        roots = levels[b]
        low = min(roots, key=sum)
        if sum(1 for r in roots if sum(r) == sum(low)) > 1:
            raise ArithmeticError(f"level {b} of {t} at node {i} has no unique lowest root")
        hw = tuple(-a for a in data.to_weight(low))
        labels = hw[: i - 1] + hw[i:]
        dim = len(roots)
        if levi.weyl_dim(labels) != dim:
            raise ArithmeticError(f"level {b} of {t} at node {i} is not irreducible")
        out.append(LeviSummand(b, low, hw, labels, dim))
    return out


def is_abelian_radical(t: LieType, i: int) -> bool:
    return len(levi_summands(t, i)) == 1


def flag_dim(t: LieType, i: int) -> int:
    """Dimension of G/P_i."""
    return levi_structure(t, i).dim_U


def dim_identity_holds(t: LieType, i: int) -> bool:
    s = levi_structure(t, i)
    return s.dim_L + 2 * s.dim_U == dim_group(t)
