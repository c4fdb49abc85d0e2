"""logmonoid: exact computations for the combinatorial side of log geometry.

Fine monoids and their presentations, Grothendieck groups, saturation,
spectra, pushouts and fiber products; rational cones, fans, Hilbert bases
and resolution by stellar subdivision; monoid ideals and their blowups;
homomorphism analysis (Kato smoothness, Kummer covers, log differentials).
All arithmetic is exact over the integers.
"""

from .errors import DomainError, InputError, InternalCheckError, LogMonoidError
from .exact_lattice import (
    FgAbelianGroup,
    SmithDecomposition,
    cokernel,
    group_from_relations,
    hom_cokernel,
    hom_kernel,
    kernel_basis,
    minimal_nonneg_solutions,
    smith_normal_form,
    solve_integer,
    solve_nonneg,
)
from .monoid_core import (
    AffineMonoid,
    MonoidElement,
    MonoidPresentation,
    PrimeIdeal,
    fiber_product,
    free_monoid,
    grothendieck_group,
    integralize,
    predicates,
    pushout,
    saturate,
    sharpen,
    spec,
    units,
)
from .cone_complex import (
    Fan,
    RationalCone,
    dual_cone,
    faces,
    fan_from_cones,
    hilbert_basis,
    multiplicity,
    resolve,
    stellar_subdivision,
)
from .log_ideal_blowup import (
    BlowupChart,
    MonoidIdeal,
    blowup_charts,
    blowup_fan,
    blowup_is_idempotent,
)
from .log_hom_analysis import (
    DifferentialPresentation,
    MonoidHom,
    SmoothnessVerdict,
    differential_rank,
    is_kummer,
    kato_criterion,
    neat_chart_class,
    relative_characteristic,
    universal_differential_presentation,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMonoid",
    "BlowupChart",
    "DifferentialPresentation",
    "DomainError",
    "Fan",
    "FgAbelianGroup",
    "InputError",
    "InternalCheckError",
    "LogMonoidError",
    "MonoidElement",
    "MonoidHom",
    "MonoidIdeal",
    "MonoidPresentation",
    "PrimeIdeal",
    "RationalCone",
    "SmithDecomposition",
    "SmoothnessVerdict",
    "blowup_charts",
    "blowup_fan",
    "blowup_is_idempotent",
    "cokernel",
    "differential_rank",
    "dual_cone",
    "faces",
    "fan_from_cones",
    "fiber_product",
    "free_monoid",
    "group_from_relations",
    "grothendieck_group",
    "hilbert_basis",
    "hom_cokernel",
    "hom_kernel",
    "integralize",
    "is_kummer",
    "kato_criterion",
    "kernel_basis",
    "minimal_nonneg_solutions",
    "multiplicity",
    "neat_chart_class",
    "predicates",
    "pushout",
    "relative_characteristic",
    "resolve",
    "saturate",
    "sharpen",
    "smith_normal_form",
    "solve_integer",
    "solve_nonneg",
    "spec",
    "stellar_subdivision",
    "units",
    "universal_differential_presentation",
]
