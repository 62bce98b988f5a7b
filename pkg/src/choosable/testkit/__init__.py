"""Independent oracle, seeded instance generator and small-graph enumerator."""

from .generate import FAMILIES, GenerationFailed, GenParams, generate_graph, generate_instance, random_lists
from .oracle import DEFAULT_CAP, SearchSpaceTooLarge, brute_force_color, k23_graph
