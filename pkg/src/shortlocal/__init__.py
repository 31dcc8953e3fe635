"""Exact syzygy computations over short local algebras (J^3 = 0) over GF(p)."""

from __future__ import annotations

from .algebra import ShortLocalAlgebra, algebra_from_json, algebra_from_products, load_algebra
from .amodule import (
    ActionModule,
    DimensionVector,
    ModulePresentation,
    direct_sum,
    load_module,
    presentation_from_relations,
    quotient_by_left_ideal,
    simple_module,
)
from .conca import ideal_closure, is_left_conca_generator, is_left_conca_ideal, search_conca
from .exactla import DEFAULT_PRIME, PrimeField
from .presets import preset, preset_names
from .resolution import (
    betti_sequence,
    gamma_estimate,
    is_aligned,
    is_koszul_up_to,
    main_lemma_w,
    syzygy,
)
from .spectral import b_sequence, spectral_data, theorem3_solve

__version__ = "0.1.0"
