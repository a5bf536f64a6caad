LOW_T2 = 'low_T2'
HIGH_T2 = 'high_T2'

REGIMES = [LOW_T2, HIGH_T2]

# Command line spelling.
REGIME_CHOICES = {
    'low': LOW_T2,
    'high': HIGH_T2,
}
