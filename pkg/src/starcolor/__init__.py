"""Star edge coloring: verifiers, an exact solver and constructive colorers
for trees, outerplanar graphs, light cacti and subcubic outerplanar graphs."""

from .cactus import LightCactus, color_light_cactus, is_light_cactus, random_light_cactus
from .exact import SolverConfig, star_chromatic_index, star_colorable
from .graph import Multigraph, OuterEmbedding, block_decomposition, bfs_spanning_tree, outerplanar_embed, parse_graph
from .outerplanar import color_outerplanar
from .subcubic import color_subcubic
from .trees import color_tree, color_tree_graph
from .verify import EdgeColoring, verify_boundary_star, verify_star

__all__ = [
    "EdgeColoring",
    "LightCactus",
    "Multigraph",
    "OuterEmbedding",
    "SolverConfig",
    "bfs_spanning_tree",
    "block_decomposition",
    "color_light_cactus",
    "color_outerplanar",
    "color_subcubic",
    "color_tree",
    "color_tree_graph",
    "is_light_cactus",
    "outerplanar_embed",
    "parse_graph",
    "random_light_cactus",
    "star_chromatic_index",
    "star_colorable",
    "verify_boundary_star",
    "verify_star",
]
