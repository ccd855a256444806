"""l-fundamental decomposition tables and quantum dimensions of standard modules.

A standard module with Drinfeld data ``w = sum w_k Lambda_k`` restricts to the
finite algebra as the tensor product over k of ``w_k`` copies of the k-th
l-fundamental module.  Types A and D are generated from closed rules; the E
tables are read from ``data/lfund_tables.txt``.  The E8 rows omit every
constituent of quantum dimension zero, so they support quantum-dimension sums
but not weight queries.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

from . import config
from .charlab import WeightMultiplicity, convolve, freudenthal
from .errors import InvalidLabelError, ResourceGuardError, UnsupportedError
from .qdim import field_for, quantum_dimension, weyl_dimension
from .rootsys import LabelLike, TypeLabel, Weight, build_root_system

COMPLETE = "complete"
NEGLIGIBLE_OMITTED = "negligible-omitted"


@dataclass(frozen=True)
class LFundamentalTable:
    label: TypeLabel
    rows: dict  # node (1-based) -> Counter of dominant highest weights
    completeness: str

    def __hash__(self):
        return hash((self.label, self.completeness))


@dataclass(frozen=True)
class StandardModuleSpec:
    label: TypeLabel
    w: tuple[int, ...]

    def __post_init__(self):
        label = TypeLabel.parse(self.label)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        if len(self.w) != label.rank:
            raise InvalidLabelError(f"w has {len(self.w)} entries but {label} has rank {label.rank}")
        if min(self.w, default=0) < 0:
            raise ValueError(f"w must be nonnegative, got {self.w}")


_TERM = re.compile(r"(\d*)L(\d+)")


def _parse_weight(text: str, rank: int) -> Weight:
    text = text.strip()
    mu = [0] * rank
    if text == "0":
        return tuple(mu)
    for term in text.split("+"):
        match = _TERM.fullmatch(term.strip())
        if match is None:
            raise ValueError(f"bad weight term {term!r}")
        mu[int(match.group(2)) - 1] += int(match.group(1) or 1)
    return tuple(mu)


@lru_cache(maxsize=None)
def _stored_tables() -> dict:
    text = resources.files("hilbqdim").joinpath("data/lfund_tables.txt").read_text(encoding="utf-8")
    tables: dict = {}
    flags: dict = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@"):
            name, flag = line[1:].split()
            flags[TypeLabel.parse(name)] = flag
            continue
        head, body = line.split(":", 1)
        name, node = head.split()
        label = TypeLabel.parse(name)
        row: Counter = Counter()
        for item in body.split(";"):
            mult, weight = item.split("*", 1)
            row[_parse_weight(weight, label.rank)] += int(mult)
        tables.setdefault(label, {})[int(node)] = row
    return {label: LFundamentalTable(label, rows, flags[label]) for label, rows in tables.items()}


@lru_cache(maxsize=None)
def lfundamental_table(label: LabelLike) -> LFundamentalTable:
    label = TypeLabel.parse(label)
    n = label.rank
    if label.family == "E":
        return _stored_tables()[label]
    unit = lambda k: tuple(int(j == k - 1) for j in range(n))
    rows = {}
    for k in range(1, n + 1):
        if label.family == "A" or k >= n - 1:
            rows[k] = Counter({unit(k): 1})
        else:
            # Lambda^k + Lambda^(k-2) + ..., ending at the vector or trivial rep
            row: Counter = Counter()
            for j in range(k, -1, -2):
                row[unit(j) if j else (0,) * n] += 1
            rows[k] = row
    return LFundamentalTable(label, rows, COMPLETE)


def l_fundamental_decomposition(label: LabelLike, k: int) -> Counter:
    """Highest weights (with multiplicity) of the k-th l-fundamental module."""
    table = lfundamental_table(label)
    if k not in table.rows:
        raise InvalidLabelError(f"{table.label} has no vertex {k}")
    return Counter(table.rows[k])


def l_fundamental_qdim(label: LabelLike, k: int) -> int:
    """Sum of quantum dimensions of the constituents of the k-th l-fundamental module.

    Omitted E8 constituents have quantum dimension zero, so the sum is exact.
    """
    rs = build_root_system(label)
    total = field_for(rs).zero()
    for lam, c in l_fundamental_decomposition(label, k).items():
        total = total + quantum_dimension(rs, lam).value * c
    value = total.as_integer()
    if value is None:
        raise ArithmeticError(f"quantum dimension of l-fundamental {rs.label}, node {k} is {total}")
    return value


def standard_module_qdim(spec: StandardModuleSpec) -> int:
    result = 1
    for k, e in enumerate(spec.w, start=1):
        if e:
            result *= l_fundamental_qdim(spec.label, k) ** e
    return result


def _require_complete(label: TypeLabel) -> None:
    if lfundamental_table(label).completeness != COMPLETE:
        raise UnsupportedError(
            f"the {label} l-fundamental table omits negligible constituents; "
            "full characters are not available")


def l_fundamental_character(label: LabelLike, k: int,
                            dim_guard: Optional[int] = None) -> WeightMultiplicity:
    label = TypeLabel.parse(label)
    _require_complete(label)
    rs = build_root_system(label)
    entries: Counter = Counter()
    for lam, c in l_fundamental_decomposition(label, k).items():
        for mu, x in freudenthal(rs, lam, dim_guard).items():
            entries[mu] += c * x
    return WeightMultiplicity(rs, entries)


def standard_module_dimension(spec: StandardModuleSpec) -> int:
    rs = build_root_system(spec.label)
    total = 1
    for k, e in enumerate(spec.w, start=1):
        if e:
            d = sum(c * weyl_dimension(rs, lam) for lam, c in l_fundamental_decomposition(spec.label, k).items())
            total *= d ** e
    return total


def standard_module_character(spec: StandardModuleSpec,
                              dim_guard: Optional[int] = None) -> WeightMultiplicity:
    """Weight system of the standard module (complete tables only)."""
    _require_complete(spec.label)
    guard = config.guard(config.CONVOLUTION_GUARD) if dim_guard is None else dim_guard
    dim = standard_module_dimension(spec)
    if dim > guard:
        raise ResourceGuardError(f"standard module {spec.w} of {spec.label} has dimension {dim} > guard {guard}")
    return _standard_character(spec, guard)


@lru_cache(maxsize=256)
def _standard_character(spec: StandardModuleSpec, guard: int) -> WeightMultiplicity:
    rs = build_root_system(spec.label)
    result = WeightMultiplicity.delta(rs)
    for k, e in enumerate(spec.w, start=1):
        if e:
            factor = l_fundamental_character(spec.label, k, guard)
            for _ in range(e):
                result = convolve(result, factor, guard)
    return result


def standard_module_weight_mult(spec: StandardModuleSpec, mu: Weight,
                                dim_guard: Optional[int] = None) -> int:
    """Multiplicity of the weight mu in the standard module."""
    return standard_module_character(spec, dim_guard)[tuple(mu)]
