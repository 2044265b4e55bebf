"""Hull dimensions, LCD and LCP tests for quasi-cyclic, double circulant and four-circulant codes."""

from __future__ import annotations

from .code import (
    DistanceBudgetExceeded,
    LinearCode,
    code_from_rows,
    dual,
    hermitian_hull_dim_oracle,
    hull_dim_oracle,
    is_lcp_oracle,
    min_distance,
    security_parameter,
)
from .fc import FourCirculantSpec, fc_build_code, fc_hull_dim_formula, fc_is_lcd, fc_lcp
from .gf import FieldElement, FieldSpec, field_make, parse_field
from .poly import Poly, RingElement, factor_xm_minus_1
from .qc import (
    DcSpec,
    QcOneGenSpec,
    dc_construct_hull_one,
    dc_hull_dim,
    qc_build_code,
    qc_hull_dim_formula,
    qc_is_lcd,
    qc_lcp_maximal_2qc,
)
from .search import SearchResult, SearchTask, reproduce_table, run_search
from .specs import spec_from_dict, spec_to_dict

__version__ = "0.1.0"

__all__ = [
    "DcSpec",
    "DistanceBudgetExceeded",
    "FieldElement",
    "FieldSpec",
    "FourCirculantSpec",
    "LinearCode",
    "Poly",
    "QcOneGenSpec",
    "RingElement",
    "SearchResult",
    "SearchTask",
    "code_from_rows",
    "dc_construct_hull_one",
    "dc_hull_dim",
    "dual",
    "factor_xm_minus_1",
    "fc_build_code",
    "fc_hull_dim_formula",
    "fc_is_lcd",
    "fc_lcp",
    "field_make",
    "hermitian_hull_dim_oracle",
    "hull_dim_oracle",
    "is_lcp_oracle",
    "min_distance",
    "parse_field",
    "qc_build_code",
    "qc_hull_dim_formula",
    "qc_is_lcd",
    "qc_lcp_maximal_2qc",
    "reproduce_table",
    "run_search",
    "security_parameter",
    "spec_from_dict",
    "spec_to_dict",
]
