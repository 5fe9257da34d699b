"""
Runtime configuration read from the environment
"""

import os


def _flag(value: str) -> bool:
    return value.strip().lower() in ("1", "true", "yes", "on")


class Config:
    LOG_LEVEL = os.environ.get('ARTIN_LOG_LEVEL') or 'WARNING'
    LOG_JSON = _flag(os.environ.get('ARTIN_LOG_JSON') or 'false')

    # Exhaustive subset verification is 2^n
    MAX_SUBSET_VERTICES = int(os.environ.get('ARTIN_MAX_SUBSET_VERTICES') or 16)
    CLIQUE_CAP = int(os.environ.get('ARTIN_CLIQUE_CAP') or 24)

    # Positive-definiteness of the cosine matrix
    MINOR_TOLERANCE = float(os.environ.get('ARTIN_MINOR_TOLERANCE') or 1e-12)
    PRECISION_DIGITS = int(os.environ.get('ARTIN_PRECISION_DIGITS') or 40)

    # Oracle bounds
    BALL_RADIUS_CAP = int(os.environ.get('ARTIN_BALL_RADIUS_CAP') or 7)
    SEARCH_234_CAP = int(os.environ.get('ARTIN_SEARCH_234_CAP') or 6)

    REPORT_SCHEMA_VERSION = 1
