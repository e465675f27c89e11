"""Graded Koszul homology, homological invariants and theorem checks over polynomial rings."""

from .complexes import (
    BettiTable,
    ComplexError,
    GradedFreeComplex,
    ModuleMap,
    PresentedComplex,
    PresentedModule,
    cohomology,
    cycles,
    hom_complex,
    homology,
    koszul_complex,
    minimize,
    subquotient,
    tensor_total,
    tensor_with_module,
)
from .groebner import (
    FreeModule,
    GBCache,
    GroebnerBasis,
    InhomogeneousError,
    ModuleElement,
    groebner_basis,
    lead_module,
    minimal_generators,
    normal_form,
    syzygies,
    use_cache,
    verify_buchberger,
)
from .invariants import (
    HilbertSeries,
    InvariantReport,
    bass_numbers,
    canonical_module,
    ext_module,
    ext_modules,
    free_resolution,
    grade,
    grade_by_koszul,
    hilbert_series,
    invariant_report,
    local_cohomology_hf,
    local_cohomology_nonvanishing,
    s2_check,
)
from .ring import QQ, FieldSpec, ParseError, Polynomial, RingMismatch, RingSpec, homogeneity
from .verifier import (
    THEOREMS,
    CorpusEntry,
    EntryAnalysis,
    TheoremVerdict,
    detect_hypotheses,
    load_corpus,
    parse_entry_file,
    parse_entry_text,
    verify_corpus,
    verify_entry,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
