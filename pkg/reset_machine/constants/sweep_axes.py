G = 'g'
T1 = 't1'
T2 = 't2'
P1 = 'p1'
P2 = 'p2'
# p locks p1 = p2, mu locks p2 = mu * p1.
P = 'p'
MU = 'mu'

AXES = [G, T1, T2, P1, P2, P, MU]

LINEAR = 'linear'
LOG = 'log'
SCALES = [LINEAR, LOG]
