"""classforge: exact-arithmetic certificates for quadratic class-group ranks
and rational torsion in hyperelliptic Jacobians, with a batch experiment CLI.
"""

__version__ = "0.1.0"
