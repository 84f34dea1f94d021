"""
pptes-rank4
Analyse van 3×3 PPT-verstrengelde toestanden van rang vier: productvectoren,
J-invarianten, SLOCC-equivalentie en canonieke vormen.
"""

__version__ = "0.1.0"
