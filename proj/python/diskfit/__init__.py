"""Closed-form least-squares pole/log-source fits on unit-disk geometries."""

import json as _json

try:
    from ._diskfit import (  # noqa: F401
        ConfigError,
        ContractError,
        cauchy_determinant,
        fit_json,
        gram_entry,
        moment_entry,
        reproduce,
        target_summary,
        target_value,
        verify,
    )
except ImportError:  # in-tree builds expose the extension at the top level
    from _diskfit import (  # noqa: F401
        ConfigError,
        ContractError,
        cauchy_determinant,
        fit_json,
        gram_entry,
        moment_entry,
        reproduce,
        target_summary,
        target_value,
        verify,
    )

__all__ = [
    "ConfigError",
    "ContractError",
    "cauchy_determinant",
    "fit",
    "fit_json",
    "gram_entry",
    "moment_entry",
    "reproduce",
    "target_summary",
    "target_value",
    "verify",
]


def fit(config):
    """Run a fit from a config dict (or JSON string); returns the result dict."""
    if not isinstance(config, str):
        config = _json.dumps(config)
    return _json.loads(fit_json(config))
