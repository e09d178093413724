"""
Test package for the cubic surface moduli embedding toolkit.
"""
