"""
Analysis module: samengesteld rapport per toestand.
"""
from .report import StateReport, analyze_state

__all__ = [
    "StateReport",
    "analyze_state",
]
