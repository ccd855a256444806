"""Strata of M_{zeta-bullet}(v, Lambda_0) and the Euler-number recursion over them.

A stratum is labelled by v' = m delta + sum m'_i alpha_i with the same delta
coefficient as v.  It is nonempty exactly when

* v' <= v in every vertex and v' >= 0,
* w^s = -C m' is dominant, and
* Lambda_0 - v' is a weight of the basic representation, i.e. m >= m'.Cm' / 2.

The transversal slice has finite data v^s = v - v' and w^s.  Euler numbers of
strata are solved from the triangular system

    chi(M(v')) = sum_{v'' <= v'} chi^s(v'') * mult of (w^s(v'') - (v' - v'')) in std(w^s(v'')),

where std(w) is the standard module with Drinfeld data w.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .errors import UnsupportedError
from .fock import lattice_points, z_coefficient
from .repdata import StandardModuleSpec, standard_module_weight_mult
from .rootsys import AffineDimVector, RootSystem, Weight

__all__ = ["AffineDimVector", "Stratum", "enumerate_strata", "strata_euler",
           "hilbert_euler_via_strata", "zero_dimensional_strata"]


@dataclass(frozen=True)
class Stratum:
    v_prime: AffineDimVector
    v_slice: tuple[int, ...]  # alpha-coordinates, finite vertices only
    w_slice: Weight
    chi_s: Optional[int] = None

    @property
    def dimension(self) -> int:
        # dim M_{zeta-bullet}^s(v', Lambda_0) = 2 (m - m'.Cm'/2)
        return 2 * (self.v_prime.m - _norm_from_w(self))

    def eq6_holds(self, rs: RootSystem, v: AffineDimVector) -> bool:
        """sum w^s_i Lambda_i - sum v^s_i alpha_i == -sum m_i alpha_i as weights."""
        lhs = tuple(w - x for w, x in zip(self.w_slice, rs.root_to_weight(self.v_slice)))
        rhs = tuple(-x for x in rs.root_to_weight(v.finite_part))
        return lhs == rhs

    def eq7_holds(self) -> bool:
        return all(x <= 0 for x in self.v_prime.finite_part)


def _norm_from_w(s: Stratum) -> int:
    return -sum(w * x for w, x in zip(s.w_slice, s.v_prime.finite_part)) // 2


def _slice_weight(rs: RootSystem, m_prime) -> Weight:
    return tuple(-x for x in rs.root_to_weight(m_prime))


def enumerate_strata(rs: RootSystem, v: AffineDimVector) -> list[Stratum]:
    """All nonempty strata of M_{zeta-bullet}(v, Lambda_0), in a fixed topological order.

    Order is by total size of v' (smallest first), then lexicographic, so
    every stratum appears after all strata in its closure-dual order ``<=``.
    """
    rs._check(v.finite_part)
    marks = rs.affine_marks[1:]
    found = []
    for x, Q in lattice_points(rs.cartan, v.m):
        if any(xi > mi for xi, mi in zip(x, v.finite_part)):
            continue
        if any(v.m * a + xi < 0 for a, xi in zip(marks, x)):
            continue
        ws = _slice_weight(rs, x)
        if min(ws) < 0:
            continue
        vs = tuple(mi - xi for mi, xi in zip(v.finite_part, x))
        found.append(Stratum(AffineDimVector(v.m, x), vs, ws))
    found.sort(key=lambda s: (sum(s.v_prime.finite_part), s.v_prime.finite_part))
    return found


def zero_dimensional_strata(rs: RootSystem, v: AffineDimVector) -> list[Stratum]:
    return [s for s in enumerate_strata(rs, v) if s.dimension == 0]


def _check_supported(rs: RootSystem) -> None:
    if str(rs.label) == "E8":
        raise UnsupportedError(
            "E8 strata recursion needs full l-fundamental characters, which are not available")


def strata_euler(rs: RootSystem, n: int, dim_guard: Optional[int] = None,
                 v: Optional[AffineDimVector] = None) -> list[Stratum]:
    """Strata of Hilb^n(C^2 / Gamma) (or of M(v, Lambda_0)) with chi_s filled in."""
    _check_supported(rs)
    v = AffineDimVector.n_delta(rs, n) if v is None else v
    strata = enumerate_strata(rs, v)
    solved: list[Stratum] = []
    for s in strata:
        mp = s.v_prime.finite_part
        chi = z_coefficient(rs, s.v_prime)
        for t in solved:
            mq = t.v_prime.finite_part
            if not all(a <= b for a, b in zip(mq, mp)):
                continue
            vs = tuple(b - a for a, b in zip(mq, mp))
            mu = tuple(w - x for w, x in zip(t.w_slice, rs.root_to_weight(vs)))
            spec = StandardModuleSpec(rs.label, t.w_slice)
            chi -= t.chi_s * standard_module_weight_mult(spec, mu, dim_guard)
        solved.append(replace(s, chi_s=chi))
    return solved


def hilbert_euler_via_strata(rs: RootSystem, n: int, dim_guard: Optional[int] = None) -> int:
    """chi(Hilb^n(C^2 / Gamma)) as the sum of the Euler numbers of its strata."""
    return sum(s.chi_s for s in strata_euler(rs, n, dim_guard))
