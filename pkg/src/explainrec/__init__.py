"""Explainable content-based recommender for scientific publications.

Candidates are scored by cosine similarity between a weighted interest-model
embedding and a keyphrase embedding of each publication; every intermediate
quantity is kept so the engine can explain itself at three levels of detail
(basic, intermediate, advanced) composed from What / What-if / Why / How
building blocks, including a live what-if loop over interest edits.
"""

__version__ = "0.1.0"
