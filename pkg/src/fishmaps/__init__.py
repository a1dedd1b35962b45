"""Fighting fish, generalized fighting fish and rooted planar maps."""

from .word import (ParseError, Point, Step, dual_word, format_word, is_quadrant_excursion,
                   jaw, lat_long, parse_word, visits_ell)
from .gff import (ClassViolation, apply_delta, apply_nabla, down_bridges, fish_augment,
                  fish_decompose, fish_odot, gff_augment, gff_decompose, gff_oplus,
                  is_down_bridge_free, is_fighting_fish, is_gff, is_up_bridge_free, up_bridges)
from .planarmap import (MapStats, RootedMap, canonical_form, cut_vertices, dual_map,
                        is_nonseparable, map_augment, map_oplus, ns_augment, ns_odot,
                        parse_map, root_edge_decompose, serialize_map, series_decompose, stats)
from .spanning import TreeRootedMap, dual_tree, rightmost_dfs_tree
from .mullin import duality_commutes, mullin_decode, mullin_encode
from .bijection import phi, phi_inv, phi_rec, statistics_check, xi, xi_inv, xi_rec
from .enumeration import (CountTable, all_ff, all_gff, brute_force_maps, count_ff, count_gff,
                          formula_ff, formula_ff_ij, grammar_maps, sample_ff, sample_gff, sample_map)

__version__ = "0.1.0"
