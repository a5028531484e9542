"""
Corpus analysis, stylistic selection, annotation and evaluation for
MR-to-utterance restaurant-domain NLG data.
"""

__version__ = "0.3.0"
