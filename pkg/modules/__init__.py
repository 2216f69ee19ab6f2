"""
Modular components for the classification of pure metacyclic fields
Q(ζ₅, ⁵√D) by differential principal factorization type
"""

__version__ = "1.0.0"
__author__ = "Metacyclic Fields Team"
