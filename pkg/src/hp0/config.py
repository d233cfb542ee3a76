import os

HP0_THREADS = max(1, int(os.getenv("HP0_THREADS", "1")))

HP0_D_MAX = int(os.getenv("HP0_D_MAX", "12"))
HP0_SEED = int(os.getenv("HP0_SEED", "0"))

# Caps used by `hp0 report`; the individual commands take --d-max as given.
HP0_ORACLE_MAX_N = int(os.getenv("HP0_ORACLE_MAX_N", "4"))
HP0_ORACLE_D_MAX = int(os.getenv("HP0_ORACLE_D_MAX", "4"))
HP0_SHEAF_D_MAX = int(os.getenv("HP0_SHEAF_D_MAX", "8"))

HP0_FULL_TOPOLOGY_MAX_FLATS = int(os.getenv("HP0_FULL_TOPOLOGY_MAX_FLATS", "20"))
HP0_OPEN_SET_LIMIT = int(os.getenv("HP0_OPEN_SET_LIMIT", str(2**16)))

FIBER_CHECKS = 3
