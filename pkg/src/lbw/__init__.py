"""Desk-scale visual imitation pipeline.

Subpackages: worldsim (toy two-domain environment), translation (unpaired
content/style translation), keypoints (unsupervised keypoint detection via
feature transport), reward (trajectory matching), agent (soft actor-critic),
pipeline (staged orchestration + CLI).
"""

__version__ = "0.1.0"
