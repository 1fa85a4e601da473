"""
qres - exact Q-resolutions of plane curves and cyclic surface singularities.
Weighted blow-ups over abelian quotient points, rational intersection theory,
weighted Bezout and the Jung method.
"""

__version__ = "1.0.0"
__author__ = "qres Team"
