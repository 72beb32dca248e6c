"""Formula view of the accelerated Collatz map."""

from .closed_form import X_value, equal_step_X, is_growth_point_by_formula, xn_closed_form
from .constructors import MonotoneSpec, construct_decreasing, construct_increasing
from .errors import DomainError, OrbitTooShort, PrefixMismatch, VerificationError
from .orbit_core import (
    GrowthClass,
    OrbitRecord,
    OrbitStep,
    classify_mod4,
    col_step,
    is_growth_point,
    orbit,
)
from .probes import (
    CycleReport,
    CycleScan,
    GrowthCensus,
    RangeSummary,
    cycle_probe,
    cycle_scan,
    growth_census,
    verify_range,
)
from .rhythm import (
    ClassEnumeration,
    RhythmClass,
    class_of,
    enumerate_class,
    rhythm_of,
    same_rhythm,
)

__version__ = "0.1.0"
