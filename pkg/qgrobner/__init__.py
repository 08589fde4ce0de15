"""
qgrobner - exact Gröbner bases for Veronese and Segre maps of quantum spaces.
"""

__version__ = "1.0.0"
