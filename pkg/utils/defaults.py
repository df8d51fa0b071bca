"""
Default constants for simulations, estimators and verdicts.
"""


class Defaults:
    """Toolkit-wide defaults. Flags and manifests override these."""

    # Simulation
    MASTER_SEED = 7
    STEPS_PER_UNIT = 4096
    WINDOW = 3.0  # point-process runs simulate on [-W, 1 + W]

    # Spectral layer
    V_ATOMS = 199
    NUMERIC_TOL = 1e-12

    # Solver
    KKT_TOL = 1e-10
    MASS_TOL = 1e-9

    # Estimators
    BINS = 50
    FRAME_T_VALUES = (0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8)
    GRID_FLOOR_STEPS = 2  # nu thresholds must be at least this many steps
    TAIL_FLOOR_STEPS = 4
    TAIL_CEILING_FRACTION = 0.25  # of the window edge
    TAIL_V_RANGE = (0.1, 0.9)
    MIN_TAIL_POINTS = 500
    MIN_LEVY_POINTS = 1000

    # Verdicts
    KS_LEVEL = 0.01
    N_SE = 3.0
    TOLERANCES = {
        'ks_max': 0.02,
        'beta_sum': 0.05,
        'beta_asymmetry': 0.05,
        'boundary_mass': 0.03,
        'frame_relative': 0.05,
        'levy_sum': 0.1,
        'u_exponent': 0.15,
    }

    # Runtime
    WORKERS_ENV = 'SUPLOC_WORKERS'
    CHUNK_SIZE = 256
    CSV_FLOAT_FORMAT = '%.16e'  # 17 significant digits
