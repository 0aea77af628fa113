"""Python access to the behaviocog core: scheme analysis, attacks, DTW."""

import json

from ._behaviocog import (
    BudgetExceeded,
    ConfigError,
    DataError,
    ProtocolError,
    SchemeParams,
    UnsupportedModulus,
    binomial_significance,
    chi_square_critical,
    combined_security,
    complexity_bits,
    compute_response,
    dtw_distance,
    expected_surviving_candidates,
    extract_features,
    hypergeom_pmf,
    info_theoretic_bound,
    monte_carlo_full_rank,
    p_empty,
    p_random_guess,
)
from . import _behaviocog as _core

__all__ = [
    "BudgetExceeded",
    "ConfigError",
    "DataError",
    "ProtocolError",
    "SchemeParams",
    "UnsupportedModulus",
    "attack",
    "binomial_significance",
    "ch_attack_estimate",
    "chi_square_critical",
    "combined_security",
    "complexity_bits",
    "compute_response",
    "dtw_distance",
    "expected_surviving_candidates",
    "extract_features",
    "hypergeom_pmf",
    "info_theoretic_bound",
    "monte_carlo_full_rank",
    "p_empty",
    "p_random_guess",
    "planted_transcript",
    "security_table",
    "simulate",
]


def ch_attack_estimate(params, budget_bits):
    return json.loads(_core._ch_attack_estimate(params, budget_bits))


def security_table(fpr_bar=0.05, gammas=(1, 2, 3)):
    """Rows for the four reference parameter sets."""
    return json.loads(_core._security_table(fpr_bar, list(gammas)))


def planted_transcript(d, k, l, n, rounds, seed, answer_zero=False):
    """Returns (transcript dict, planted secret)."""
    out = json.loads(_core._planted_transcript(d, k, l, n, rounds, seed, answer_zero))
    return out["transcript"], out["secret"]


def attack(name, transcript, budget=0):
    """Runs bruteforce, mitm, ge or ge-slack; returns the JSON report as a dict."""
    if not isinstance(transcript, str):
        transcript = json.dumps(transcript)
    return json.loads(_core._attack(name, transcript, budget))


def simulate(d=5, k=14, l=30, n=180, gamma=2, t=10, users=1, sessions=5, noise=0.0, seed=1):
    return json.loads(_core._simulate(d, k, l, n, gamma, t, users, sessions, noise, seed))
