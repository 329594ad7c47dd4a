"""Exact computations with braided Hopf algebras in Yetter-Drinfeld categories over kG."""

__version__ = "0.1.0"
