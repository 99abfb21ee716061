"""Finite tolerance relations, their coverings, quasiorders and lattices."""

from .blocks import (
    BlockFamily,
    blocks,
    is_block,
    is_preblock,
    neighborhood_block_report,
    tolerance_from_blocks,
)
from .coverings import (
    Covering,
    canonical_bases,
    induced_tolerance,
    irredundant_covering_of,
    is_canonical_base,
    is_irredundant,
    is_neighborhood_family,
    is_normal,
)
from .errors import (
    BlockLimitExceeded,
    ParseError,
    ResourceLimitError,
    SearchLimitExceeded,
    ToleranceError,
    UniverseTooLarge,
    UnknownElement,
    ValidationError,
)
from .lattice import (
    FiniteLattice,
    FormalContext,
    SetLattice,
    bowtie_tolerance,
    check_c1_c2_c3,
    check_distributive_corollary,
    concepts,
    is_atomistic,
    is_boolean,
    is_ortholattice,
    lower_definable,
    upper_definable,
)
from .order import (
    EquivalenceReport,
    NeighborhoodPoset,
    check_characterization,
    check_helly_theorem,
    check_main_equivalence,
    has_helly2,
    helly2_by_triples,
    helly_number,
)
from .relation import (
    Quasiorder,
    Subset,
    Tolerance,
    Universe,
    is_bounded_by_minimal,
    lower_approx,
    minimal_elements,
    neighborhood,
    quasiorder_of,
    tolerance_from_edges,
    tolerance_of,
    upper_approx,
    upset,
)

__version__ = "0.1.0"
