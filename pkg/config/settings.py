import logging

LOG_LEVEL = logging.WARNING
VERBOSE_LOG_LEVEL = logging.INFO

# verify-Standardbereich
DEFAULT_D_MIN = 3
DEFAULT_D_MAX = 8

# Obergrenzen der Sweeps
IDENTITY_D_MAX = 40
SOLVER_D_MAX = 12
SCHUBERT_N_MAX = 15
DUALITY_N_MAX = 12

THETA_GENUS_RANGE = range(2, 6)
THETA_MULTIPLIER_RANGE = range(1, 6)

ORACLE_PRIME_BOUND = 200
ORACLE_SAMPLES = 3
ORACLE_CURVE_POOL = 10
ORACLE_RESAMPLES = 5
ORACLE_SEED = 1729

MOBIUS_SAMPLES = 20
MOBIUS_SEED = 4104

VERIFY_MAX_WORKERS = 4
