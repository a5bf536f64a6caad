"""Fixed CSV column orders."""

SWEEP_COLUMNS = [
    'value',
    'c_l1_exact',
    'c_l1_perturbative',
    'sum_1_exact',
    'sum_2_exact',
    'sum_3_exact',
    'sum_1_perturbative',
    'sum_2_perturbative',
    'sum_3_perturbative',
    'max_sum',
    'has_magic',
    'warnings',
]

PERTURBATIVE_SWEEP_COLUMNS = [
    'c_l1_perturbative',
    'sum_1_perturbative',
    'sum_2_perturbative',
    'sum_3_perturbative',
]

CRIT_COLUMNS = [
    't_crit_1',
    't_crit_2',
    't_crit_3',
    't_crit',
    'exact_boundary',
    'boundary_rel_diff',
    'window_1_lo',
    'window_1_hi',
    'window_2_lo',
    'window_2_hi',
    'window_3_lo',
    'window_3_hi',
]

TRANSIENT_COLUMNS = [
    't',
    'c_l1',
    'max_sum',
    'trace_distance',
]
