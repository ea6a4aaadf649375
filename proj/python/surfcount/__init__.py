"""Exact counts of arc diagrams on surfaces with boundary."""

from ._surfcount import (
    Engine,
    Unsupported,
    catalan,
    closed_G,
    closed_N,
    closed_form_matches,
    closed_form_names,
    disc_matchings,
    extract_psi,
    fit_g_poly,
    fit_nhat,
    fit_sum,
    pants_search,
    run_suite,
    series_json,
    suite_names,
    sum_direct,
)

__all__ = [
    "Engine",
    "Unsupported",
    "catalan",
    "closed_G",
    "closed_N",
    "closed_form_matches",
    "closed_form_names",
    "disc_matchings",
    "extract_psi",
    "fit_g_poly",
    "fit_nhat",
    "fit_sum",
    "pants_search",
    "run_suite",
    "series_json",
    "suite_names",
    "sum_direct",
]
