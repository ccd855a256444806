"""The Fock-space character and its root-of-unity specialisation.

The character is

    Z = prod_{k >= 1} (1 - q^k)^-(n+1) * sum_{x in Z^n} q^(x.Cx / 2) prod_i e^(-x_i alpha_i),

with q = e^-delta.  Substituting e^-alpha_i = omega = exp(2 pi i / (h^vee + 1))
only needs, for each norm Q = x.Cx / 2, the counts of lattice points by the
residue of sum_i x_i mod (h^vee + 1).  Those counts come from an exact
Fincke-Pohst enumeration driven by an LDL^T factorisation of C over Q.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .cyclo import CycloNum
from .errors import IntegralityError
from .qdim import field_for
from .rootsys import AffineDimVector, RootSystem, build_root_system


class QSeries:
    """Power series in q truncated after q^order, with dense exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: Optional[int] = None):
        coeffs = list(coeffs)
        if order is not None:
            coeffs = (coeffs + [0] * (order + 1))[: order + 1]
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return self.coeffs == other.coeffs
        return self.coeffs == list(other)

    def __repr__(self):
        return f"QSeries({self.coeffs})"

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        return QSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])])

    def __mul__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return QSeries(out)

    def tolist(self) -> list:
        return list(self.coeffs)


@lru_cache(maxsize=None)
def _colored_partitions(colors: int, order: int) -> tuple[int, ...]:
    # n a_n = colors * sum_{k=1..n} sigma(k) a_{n-k}
    sigma = [0] * (order + 1)
    for d in range(1, order + 1):
        for k in range(d, order + 1, d):
            sigma[k] += d
    a = [1] + [0] * order
    for n in range(1, order + 1):
        s = sum(sigma[k] * a[n - k] for k in range(1, n + 1))
        q, r = divmod(colors * s, n)
        assert r == 0
        a[n] = q
    return tuple(a)


def colored_partition_series(colors: int, N: int) -> QSeries:
    """Coefficients of prod_{k >= 1} (1 - q^k)^-colors up to q^N."""
    if colors < 1:
        raise ValueError(f"colors must be positive, got {colors}")
    return QSeries(_colored_partitions(colors, N))


def ldl_decomposition(matrix: Sequence[Sequence[int]]):
    """Exact LDL^T of a symmetric positive definite matrix: (unit lower L, diagonal D)."""
    n = len(matrix)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = Fraction(matrix[j][j]) - sum(L[j][k] ** 2 * D[k] for k in range(j))
        if D[j] <= 0:
            raise ValueError("matrix is not positive definite")
        for i in range(j + 1, n):
            L[i][j] = (matrix[i][j] - sum(L[i][k] * L[j][k] * D[k] for k in range(j))) / D[j]
    return L, D


@dataclass(frozen=True)
class _ScaledLDL:
    """Integer form of x.Cx = sum_k D_k (x_k + sum_{j>k} L_jk x_j)^2.

    With d_k the common denominator of column k of L and M the common
    denominator of all D_k / d_k^2,

        M x.Cx = sum_k w_k (d_k x_k - P_k)^2,   P_k = sum_{j>k} a_jk x_j,

    where w_k, d_k, a_jk are integers.  All enumeration bounds are then exact
    integer square roots.
    """

    scale: int
    w: tuple[int, ...]
    d: tuple[int, ...]
    a: tuple[tuple[tuple[int, int], ...], ...]  # a[k] = ((j, a_jk), ...) with a_jk != 0


@lru_cache(maxsize=None)
def _scaled_ldl(cartan: tuple) -> _ScaledLDL:
    n = len(cartan)
    L, D = ldl_decomposition(cartan)
    d = [math.lcm(*(L[j][k].denominator for j in range(k, n))) for k in range(n)]
    E = [D[k] / (d[k] * d[k]) for k in range(n)]
    M = math.lcm(*(e.denominator for e in E)) if n else 1
    w = tuple(int(e * M) for e in E)
    a = tuple(tuple((j, int(-d[k] * L[j][k])) for j in range(k + 1, n) if L[j][k]) for k in range(n))
    return _ScaledLDL(M, w, tuple(d), a)


def _bounds(S: _ScaledLDL, k: int, x, remaining: int) -> tuple[int, int, int]:
    """(lo, hi, P_k) for coordinate k given the coordinates above it and the scaled budget."""
    P = 0
    for j, c in S.a[k]:
        P += c * x[j]
    t = math.isqrt(remaining // S.w[k])
    dk = S.d[k]
    return -((t - P) // dk), (P + t) // dk, P


def lattice_points(cartan: Sequence[Sequence[int]], max_norm: int,
                   outer: Optional[Sequence[int]] = None) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (x, x.Cx / 2) for every x in Z^n with x.Cx / 2 <= max_norm.

    ``outer`` restricts the last coordinate to the given values, which lets
    callers partition the search.  Deterministic order.
    """
    n = len(cartan)
    if n == 0:
        yield (), 0
        return
    cartan = tuple(tuple(r) for r in cartan)
    S = _scaled_ldl(cartan)
    x = [0] * n

    def level(k: int, remaining: int, partial: int) -> Iterator:
        # partial = x.Cx restricted to coordinates > k
        lo, hi, P = _bounds(S, k, x, remaining)
        values = range(lo, hi + 1)
        if k == n - 1 and outer is not None:
            values = [v for v in outer if lo <= v <= hi]
        row = cartan[k]
        b = sum(row[j] * x[j] for j in range(k + 1, n))
        wk, dk = S.w[k], S.d[k]
        for v in values:
            norm = partial + 2 * v * (b + v)
            if k == 0:
                x[0] = v
                yield tuple(x), norm // 2
            else:
                x[k] = v
                t = dk * v - P
                yield from level(k - 1, remaining - wk * t * t, norm)
        x[k] = 0

    yield from level(n - 1, S.scale * 2 * max_norm, 0)


@dataclass
class ThetaSlice:
    """Lattice-point counts keyed by norm and by residue of the coordinate sum."""

    modulus: int
    max_norm: int
    by_norm: dict = field(default_factory=dict)  # Q -> {sigma: count}

    def total(self, Q: int) -> int:
        return sum(self.by_norm.get(Q, {}).values())

    def merge(self, other: "ThetaSlice") -> None:
        for Q, row in other.by_norm.items():
            mine = self.by_norm.setdefault(Q, {})
            for s, c in row.items():
                mine[s] = mine.get(s, 0) + c

    def normalized(self) -> "ThetaSlice":
        """Same data with norms and residues in sorted order."""
        ordered = {Q: dict(sorted(self.by_norm[Q].items())) for Q in sorted(self.by_norm)}
        return ThetaSlice(self.modulus, self.max_norm, ordered)


def _count_slice(label: str, N: int, outer: Optional[Sequence[int]]) -> ThetaSlice:
    rs = build_root_system(label)
    mod = rs.h_dual + 1
    cartan = rs.cartan
    n = rs.rank
    S = _scaled_ldl(cartan)
    counts = [[0] * mod for _ in range(N + 1)]
    x = [0] * n

    # same walk as lattice_points, with the last level unrolled into counters
    def level(k: int, remaining: int, partial: int, total: int) -> None:
        lo, hi, P = _bounds(S, k, x, remaining)
        values = range(lo, hi + 1)
        if k == n - 1 and outer is not None:
            values = [v for v in outer if lo <= v <= hi]
        row = cartan[k]
        b = sum(row[j] * x[j] for j in range(k + 1, n))
        if k == 0:
            half = partial // 2
            for v in values:
                counts[half + v * (b + v)][(total + v) % mod] += 1
            return
        wk, dk = S.w[k], S.d[k]
        for v in values:
            x[k] = v
            t = dk * v - P
            level(k - 1, remaining - wk * t * t, partial + 2 * v * (b + v), total + v)
        x[k] = 0

    level(n - 1, S.scale * 2 * N, 0, 0)
    result = ThetaSlice(mod, N)
    for Q, row in enumerate(counts):
        nonzero = {s: c for s, c in enumerate(row) if c}
        if nonzero:
            result.by_norm[Q] = nonzero
    return result


def enumerate_lattice(rs: RootSystem, N: int, jobs: int = 1) -> ThetaSlice:
    """Count x in Z^n with x.Cx / 2 = Q <= N, split by sum(x) mod (h^vee + 1).

    With ``jobs > 1`` the outermost coordinate range is split across worker
    processes; the merged result is identical to the sequential one.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    label = str(rs.label)
    if jobs <= 1 or rs.rank < 2:
        return _count_slice(label, N, None).normalized()
    S = _scaled_ldl(rs.cartan)
    lo, hi, _ = _bounds(S, rs.rank - 1, [0] * rs.rank, S.scale * 2 * N)
    values = list(range(lo, hi + 1))
    chunks = [values[i::jobs] for i in range(jobs)]
    result = ThetaSlice(rs.h_dual + 1, N)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_count_slice, [label] * len(chunks), [N] * len(chunks), chunks):
            result.merge(part)
    return result.normalized()


def _partial_norm(cartan, x, start) -> int:
    n = len(x)
    total = 0
    for i in range(start, n):
        if x[i]:
            row = cartan[i]
            total += x[i] * sum(row[j] * x[j] for j in range(start, n) if x[j])
    return total


def lattice_norm(rs: RootSystem, x: Sequence[int]) -> int:
    """x.Cx / 2 for a vector of simple-root coefficients."""
    rs._check(x)
    return _partial_norm(rs.cartan, list(x), 0) // 2


def z_coefficient(rs: RootSystem, v: AffineDimVector) -> int:
    """Coefficient of e^-v in Z, i.e. the Euler number of the Gamma-fixed Hilbert scheme component."""
    Q = lattice_norm(rs, v.finite_part)
    if v.m < Q:
        return 0
    return _colored_partitions(rs.rank + 1, v.m)[v.m - Q]


def specialized_theta(rs: RootSystem, theta: ThetaSlice) -> list[CycloNum]:
    """For each norm Q, sum_sigma count(Q, sigma) * omega^sigma with omega = zeta^2."""
    F = field_for(rs)
    out = []
    for Q in range(theta.max_norm + 1):
        row = theta.by_norm.get(Q, {})
        out.append(F.from_exponents({2 * s: c for s, c in row.items()}))
    return out


def euler_series(rs: RootSystem, N: int, jobs: int = 1,
                 theta: Optional[ThetaSlice] = None) -> QSeries:
    """Euler numbers of Hilb^n(C^2 / Gamma) for n = 0..N from the specialised character."""
    theta = enumerate_lattice(rs, N, jobs) if theta is None else theta
    spec = specialized_theta(rs, theta)
    parts = _colored_partitions(rs.rank + 1, N)
    coeffs = []
    for n in range(N + 1):
        total = spec[0].field.zero()
        for Q in range(n + 1):
            total = total + spec[Q] * parts[n - Q]
        value = total.as_integer()
        if value is None:
            raise IntegralityError(f"coefficient {n} of the {rs.label} series is {total}, not an integer")
        coeffs.append(value)
    return QSeries(coeffs)


def unspecialized_series(rs: RootSystem, N: int, theta: Optional[ThetaSlice] = None) -> QSeries:
    """Z at e^-alpha_i = 1: colored partitions times the plain theta series."""
    theta = enumerate_lattice(rs, N) if theta is None else theta
    plain = QSeries([theta.total(Q) for Q in range(N + 1)])
    return colored_partition_series(rs.rank + 1, N) * plain
