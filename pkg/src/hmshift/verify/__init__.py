"""Exact search, instance generation and proof replay."""
from .generate import gen_random_instance, random_family, random_intersecting
from .replay import ReplayInputError, ReplayReport, replay_theorem1, replay_theorem2
from .search import (
    EnvelopeError,
    SearchReport,
    optimal_A_for_B,
    search_max_cross,
    search_max_ekr,
    search_max_hm,
)
