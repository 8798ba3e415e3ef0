"""Star quivers V_d: d outer vertices with one arrow each into a central vertex.

A representation of dimension (n, a, ..., a) is a d-tuple of a-dimensional
subspaces of k^n, so GL_n-orbits on (Gr(a, n))^d match GL-orbits of the
quiver. Vertex 1 is the centre throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import random

from .errors import InvalidInput, OracleTooLarge
from .exact import rank

ORACLE_MAX_DIM = 10_000


@dataclass(frozen=True)
class DimVector:
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) < 2:
            raise InvalidInput("a dimension vector needs a centre and at least one arm")
        if not all(isinstance(c, int) and c >= 0 for c in coords):
            raise InvalidInput(f"dimension vector {coords} must be nonnegative integers")
        object.__setattr__(self, "coords", coords)

    @property
    def arms(self) -> int:
        return len(self.coords) - 1

    @classmethod
    def uniform(cls, d: int, n: int, a: int) -> DimVector:
        return cls((n,) + (a,) * d)


def _vec(d: int, x) -> tuple[int, ...]:
    x = tuple(x.coords if isinstance(x, DimVector) else x)
    if d < 1:
        raise InvalidInput(f"need at least one arm, got d={d}")
    if len(x) != d + 1:
        raise InvalidInput(f"vector {x} has length {len(x)}, expected {d + 1}")
    return x


def euler_form(d: int, x, y) -> int:
    x, y = _vec(d, x), _vec(d, y)
    return sum(p * q for p, q in zip(x, y)) - y[0] * sum(x[1:])


def reflect(d: int, i: int, alpha) -> tuple[int, ...]:
    """Fundamental reflection r_i at vertex i (1-based); coordinates may go negative."""
    alpha = _vec(d, alpha)
    if not 1 <= i <= d + 1:
        raise InvalidInput(f"vertex {i} out of range 1..{d + 1}")
    e = tuple(int(j == i - 1) for j in range(d + 1))
    c = euler_form(d, alpha, e) + euler_form(d, e, alpha)
    return tuple(a - c * b for a, b in zip(alpha, e))


def tits_form(d: int, alpha) -> int:
    return euler_form(d, alpha, alpha)


def has_open_orbit_uniform(d: int, n: int, a: int) -> bool:
    """Whether GL acts with an open orbit on representations of dimension (n, a, ..., a)."""
    if min(d, n, a) < 1:
        raise InvalidInput(f"need positive d, n, a; got {(d, n, a)}")
    while True:
        if a >= n:
            return True
        a = min(a, n - a)
        if 2 * n <= d * a:
            return False
        if n >= d * a:
            return True
        # r_1 sends the centre n to d*a - n, which is strictly smaller here
        n2 = d * a - n
        assert 0 < n2 < n
        n = n2


def euler_sign_open(d: int, n: int, a: int) -> bool:
    return tits_form(d, DimVector.uniform(d, n, a)) > 0


def _check_node(l: int, i: int) -> None:
    if not (isinstance(l, int) and isinstance(i, int) and 1 <= i <= l):
        raise InvalidInput(f"need 1 <= i <= l, got l={l}, i={i}")


def m_li(l: int, i: int) -> int:
    """Largest a with a*i*(l+1-i) < (l+1)^2."""
    _check_node(l, i)
    return ((l + 1) ** 2 - 1) // (i * (l + 1 - i))


def s_li(l: int, i: int) -> int | None:
    """Largest a >= 2 with i/(l+1-i) outside the roots of x^2 - a x + 1, or None."""
    _check_node(l, i)
    rho = Fraction(i, l + 1 - i)
    bound = rho + 1 / rho
    # largest integer strictly below bound
    a = bound.numerator // bound.denominator
    if a == bound:
        a -= 1
    return a if a >= 2 else None


def gtd_levi_typeA(l: int, i: int) -> int:
    _check_node(l, i)
    if 2 * i == l + 1:
        return 1
    return s_li(l, i)


def quiver_gtd_typeA(l: int, i: int) -> int:
    """Largest d with an open orbit on d-tuples of i-subspaces of k^(l+1)."""
    _check_node(l, i)
    d = 1
    while has_open_orbit_uniform(d + 1, l + 1, i):
        d += 1
    return d


def gtd_G_typeA(l: int, i: int) -> int:
    value = m_li(l, i)
    via_quiver = quiver_gtd_typeA(l, i)
    if value != via_quiver:
        raise ArithmeticError(f"m_li={value} but quiver path gives {via_quiver} at l={l}, i={i}")
    return value


def rep_dim(d: int, alpha) -> int:
    alpha = _vec(d, alpha)
    return alpha[0] * sum(alpha[1:])


def _differential(alpha, points) -> list[list[int]]:
    """Rows are images of the elementary basis of gl(alpha) at the point."""
    n = alpha[0]
    # tangent coordinates: arm j, row r < n, column c < a_j
    offsets, off = [], 0
    for a in alpha[1:]:
        offsets.append(off)
        off += n * a
    rows = []
    # X_1 = E_pq acts by E_pq A_j: row p of the image is row q of A_j
    for p in range(n):
        for q in range(n):
            v = [0] * off
            for j, A in enumerate(points):
                a = alpha[j + 1]
                base = offsets[j] + p * a
                for c in range(a):
                    v[base + c] = A[q][c]
            rows.append(v)
    # X_j = E_pq acts by -A_j E_pq: column q of the image is minus column p of A_j
    for j, A in enumerate(points):
        a = alpha[j + 1]
        for p in range(a):
            for q in range(a):
                v = [0] * off
                for r in range(n):
                    v[offsets[j] + r * a + q] = -A[r][p]
                rows.append(v)
    return rows


def orbit_dimension_oracle(d: int, alpha, seed: int = 0, trials: int = 3,
                           max_dim: int = ORACLE_MAX_DIM) -> int:
    """Largest orbit dimension seen at ``trials`` random integer points.

    Entries are drawn uniformly from [-10, 10]; the rank of the action
    differential is exact. Full rank equals ``rep_dim``.
    """
    alpha = _vec(d, alpha)
    DimVector(alpha)
    full = rep_dim(d, alpha)
    if full > max_dim:
        raise OracleTooLarge(f"representation space of dimension {full} exceeds {max_dim}")
    if trials < 1:
        raise InvalidInput("need at least one trial")
    rng = random.Random(seed)
    n = alpha[0]
    best = 0
    for _ in range(trials):
        points = [[[rng.randint(-10, 10) for _ in range(a)] for _ in range(n)] for a in alpha[1:]]
        best = max(best, rank(_differential(alpha, points), stop_at=full))
        if best == full:
            break
    return best


def oracle_open(d: int, alpha, seed: int = 0, trials: int = 3) -> bool:
    return orbit_dimension_oracle(d, alpha, seed, trials) == rep_dim(d, alpha)
