"""Exact quantum dimensions at roots of unity and Euler numbers of Hilbert schemes of ADE orbifolds.

Everything is computed in exact arithmetic: integers, rationals, and the
cyclotomic field Q(zeta) with zeta = exp(2 pi i / 2(h^vee + 1)).
"""
from .errors import (DimensionMismatchError, HilbQdimError, IntegralityError, InvalidLabelError,
                     NotACharacterError, NotDominantError, ResourceGuardError, UnsupportedError)
from .rootsys import AffineDimVector, RootSystem, TypeLabel, build_root_system, dynkin_diagram
from .cyclo import CycloField, CycloNum, cyclo_field, q_integer
from .qdim import QuantumDimension, quantum_dimension, quantum_dimension_via_character, weyl_dimension
from .charlab import WeightMultiplicity, convolve, decompose, freudenthal, multiplicity, trivial_multiplicity
from .repdata import (StandardModuleSpec, l_fundamental_qdim, lfundamental_table,
                      standard_module_character, standard_module_qdim)
from .fock import QSeries, enumerate_lattice, euler_series, unspecialized_series
from .strata import enumerate_strata, hilbert_euler_via_strata, strata_euler
from .oracle import count_staircases, euler_series_oracle

__version__ = "0.1.0"
