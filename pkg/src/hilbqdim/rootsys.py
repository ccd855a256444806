"""Simply-laced (ADE) root systems.

Weights are plain integer tuples in the fundamental-weight basis, so
``mu[i]`` is the coefficient of the (i+1)-th fundamental weight.  Roots are
integer tuples in the simple-root basis.  Vertices follow Bourbaki numbering
(see :func:`dynkin_diagram`); index ``i`` in a tuple is vertex ``i + 1``.

Coroots are identified with roots throughout, with the normalisation
``(alpha_i, alpha_i) = 2``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import DimensionMismatchError, InvalidLabelError

Weight = tuple[int, ...]
RootCoords = tuple[int, ...]


@dataclass(frozen=True, order=True)
class TypeLabel:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise InvalidLabelError(f"unknown family {self.family!r}; expected A, D or E")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidLabelError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family == "D" and self.rank < 4:
            raise InvalidLabelError(f"D_n requires n >= 4, got D{self.rank}")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise InvalidLabelError(f"E_n requires n in 6, 7, 8, got E{self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: Union[str, "TypeLabel"]) -> "TypeLabel":
        if isinstance(text, TypeLabel):
            return text
        match = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", str(text))
        if match is None:
            raise InvalidLabelError(
                f"cannot parse root-system label {text!r}; valid labels are "
                "A1, A2, ..., D4, D5, ..., E6, E7, E8"
            )
        return cls(match.group(1).upper(), int(match.group(2)))


LabelLike = Union[str, TypeLabel]


def _edges(label: TypeLabel) -> list[tuple[int, int]]:
    # 0-based vertex pairs of the finite Dynkin diagram, Bourbaki numbering
    n = label.rank
    if label.family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if label.family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E_n: chain 1-3-4-5-...-n with vertex 2 attached to 4
    chain = [0, 2] + list(range(3, n))
    return [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)] + [(1, 3)]


def _inverse(matrix: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system context for one ADE type."""

    label: TypeLabel
    cartan: tuple[tuple[int, ...], ...]
    inverse_cartan: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[RootCoords, ...]
    h_dual: int
    affine_marks: tuple[int, ...]

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.label == self.label

    def __hash__(self):
        return hash(("RootSystem", self.label))

    def __reduce__(self):
        return (build_root_system, (str(self.label),))

    @property
    def rank(self) -> int:
        return self.label.rank

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def highest_root(self) -> RootCoords:
        return self.positive_roots[-1]

    @property
    def affine_attachments(self) -> tuple[int, ...]:
        """Number of edges joining each finite vertex to the affine vertex 0."""
        return self.root_to_weight(self.highest_root)

    @property
    def m(self) -> int:
        """Conductor 2(h^vee + 1) of the cyclotomic field used for this type."""
        return 2 * (self.h_dual + 1)

    def _check(self, vec: Sequence) -> None:
        if len(vec) != self.rank:
            raise DimensionMismatchError(
                f"vector of length {len(vec)} used with {self.label} (rank {self.rank})")

    def root_to_weight(self, root: Sequence[int]) -> Weight:
        """Fundamental-weight coordinates of sum root[j] * alpha_j."""
        self._check(root)
        return tuple(sum(c * r for c, r in zip(row, root)) for row in self.cartan)

    def weight_to_root(self, mu: Sequence[int]) -> tuple[Fraction, ...]:
        """Simple-root coordinates of a weight (exact rationals)."""
        self._check(mu)
        return tuple(sum(c * x for c, x in zip(row, mu)) for row in self.inverse_cartan)

    def fundamental_weight(self, i: int) -> Weight:
        """Lambda_i for a 1-based vertex i."""
        if not 1 <= i <= self.rank:
            raise InvalidLabelError(f"{self.label} has no vertex {i}")
        return tuple(int(j == i - 1) for j in range(self.rank))

    def in_root_lattice(self, mu: Sequence[int]) -> bool:
        return all(x.denominator == 1 for x in self.weight_to_root(mu))

    def height(self, root: Sequence[int]) -> int:
        return sum(root)


def cartan_matrix(label: LabelLike) -> tuple[tuple[int, ...], ...]:
    label = TypeLabel.parse(label)
    n = label.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(label):
        c[i][j] = c[j][i] = -1
    return tuple(tuple(row) for row in c)


def _positive_roots(cartan) -> list[RootCoords]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    layer = list(simple)
    roots = list(simple)
    seen = set(simple)
    while layer:
        nxt = []
        for gamma in layer:
            for i in range(n):
                # simply laced: gamma + alpha_i is a root iff (gamma, alpha_i) = -1
                if sum(gamma[j] * cartan[j][i] for j in range(n)) < 0:
                    beta = gamma[:i] + (gamma[i] + 1,) + gamma[i + 1:]
                    if beta not in seen:
                        seen.add(beta)
                        nxt.append(beta)
        layer = sorted(nxt)
        roots.extend(layer)
    return roots


@lru_cache(maxsize=None)
def _build(label: TypeLabel) -> RootSystem:
    cartan = cartan_matrix(label)
    roots = _positive_roots(cartan)
    roots.sort(key=lambda r: (sum(r), r))
    theta = roots[-1]
    return RootSystem(
        label=label,
        cartan=cartan,
        inverse_cartan=_inverse(cartan),
        positive_roots=tuple(roots),
        h_dual=1 + sum(theta),
        affine_marks=(1,) + theta,
    )


def build_root_system(label: LabelLike) -> RootSystem:
    """Return the (cached) root system for a label such as ``"E8"``."""
    return _build(TypeLabel.parse(label))


def pairing(mu: Sequence[int], alpha: Sequence[int]) -> int:
    """<mu, alpha^vee> for a weight in fundamental coordinates and a root in simple-root coordinates."""
    if len(mu) != len(alpha):
        raise DimensionMismatchError(f"weight of length {len(mu)} paired with root of length {len(alpha)}")
    return sum(m * a for m, a in zip(mu, alpha))


def inner_product(rs: RootSystem, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
    """Invariant form on weights, normalised so that roots have square length 2."""
    rs._check(mu)
    rs._check(nu)
    c = rs.inverse_cartan
    return sum((mu[i] * nu[j] * c[i][j] for i in range(rs.rank) for j in range(rs.rank)
                if mu[i] and nu[j]), Fraction(0))


def simple_reflection(rs: RootSystem, mu: Sequence[int], i: int) -> Weight:
    """s_i(mu) = mu - <mu, alpha_i> alpha_i, with i a 0-based vertex index."""
    k = mu[i]
    if k == 0:
        return tuple(mu)
    row = rs.cartan[i]
    return tuple(x - k * c for x, c in zip(mu, row))


def dynkin_diagram(label: LabelLike) -> str:
    """ASCII drawing of the finite diagram with vertex numbers and affine attachment."""
    label = TypeLabel.parse(label)
    n = label.rank
    if label.family == "A":
        if n == 1:
            body = "1   (affine vertex 0 joined to 1 by a double edge)"
        else:
            body = " - ".join(str(i) for i in range(1, n + 1))
            body += f"\n(affine vertex 0 joined to 1 and {n})"
    elif label.family == "D":
        chain = " - ".join(str(i) for i in range(1, n - 1))
        pad = " " * (len(chain) - len(str(n - 2)))
        body = f"{pad}  {n - 1}\n{pad} /\n{chain}\n{pad} \\\n{pad}  {n}\n(affine vertex 0 joined to 2)"
    else:
        chain = " - ".join(["1", "3"] + [str(i) for i in range(4, n + 1)])
        attach = {6: 2, 7: 1, 8: 8}[n]
        body = f"        2\n        |\n{chain}\n(affine vertex 0 joined to {attach})"
    return f"{label}\n{body}\n"


@dataclass(frozen=True)
class AffineDimVector:
    """Affine dimension vector v = m delta + sum_i m_i alpha_i over the finite vertices.

    In vertex coordinates v_0 = m and v_i = m a_i + m_i, with a_i the affine marks.
    """

    m: int
    finite_part: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "finite_part", tuple(int(x) for x in self.finite_part))

    @classmethod
    def from_vertex_vector(cls, rs: RootSystem, v: Sequence[int]) -> "AffineDimVector":
        """Build from (v_0, v_1, ..., v_n)."""
        if len(v) != rs.rank + 1:
            raise DimensionMismatchError(f"{rs.label} dimension vectors have {rs.rank + 1} entries")
        m = v[0]
        return cls(m, tuple(v[i] - m * rs.affine_marks[i] for i in range(1, rs.rank + 1)))

    def vertex_vector(self, rs: RootSystem) -> tuple[int, ...]:
        rs._check(self.finite_part)
        return (self.m,) + tuple(self.m * a + x for a, x in zip(rs.affine_marks[1:], self.finite_part))

    def is_nonnegative(self, rs: RootSystem) -> bool:
        return min(self.vertex_vector(rs)) >= 0

    @classmethod
    def n_delta(cls, rs: RootSystem, n: int) -> "AffineDimVector":
        return cls(n, (0,) * rs.rank)
