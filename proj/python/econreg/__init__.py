"""Pearson correlation, OLS regression and staged GPDI analysis.

Thin wrapper over the compiled ``_core`` module. Functions returning
structured results as JSON text on the C++ side are decoded here.
"""

import json as _json

from . import _core
from ._core import (  # noqa: F401
    Dataset,
    Error,
    Series,
    align,
    correlation_matrix,
    equation_string,
    f_cdf,
    fit,
    load_csv,
    log_gamma,
    moments,
    parse_csv,
    pearson,
    predict,
    reg_inc_beta,
    render_scatter_svg,
    residuals,
    sscp,
    t_cdf,
)


def verdict(statistic, kind, df1, df2=0, alpha=0.05):
    return _json.loads(_core.verdict(statistic, kind, df1, df2, alpha))


def run_staged_analysis(dataset):
    return [_json.loads(s) for s in _core.run_staged_analysis(dataset)]


def paper_consistency_suite():
    return [_json.loads(s) for s in _core.paper_consistency_suite()]


def model_dict(model):
    return _json.loads(model.to_json())
