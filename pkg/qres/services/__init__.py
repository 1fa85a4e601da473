"""
Services package: the computations, one singleton per area.
"""
