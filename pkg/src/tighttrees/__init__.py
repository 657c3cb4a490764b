"""Peeling, greedy embedding and exhaustive search for tight r-trees."""

from .constructions import (ConstructionParams, augmented_lower_bound_graph, grs_path_extremal,
                            lower_bound_edge_count, lower_bound_graph)
from .embedder import Embedding, Inconclusive, LemmaViolation, embed, greedy_embed_nonpartite, verify_embedding
from .hypergraph import Hypergraph, avoiding_shadow_counts, build_hypergraph, codegree, shadow
from .oracle import SearchBudget, Verdict, contains_any_tight_tree, contains_tree
from .peeling import (PeelingPlan, PeelResult, Thresholds, assign_labels, bipartite_min_degree_subgraph,
                      check_codegree_condition, make_thresholds, peel)
from .tree import TightTree, canonical_partition, random_tight_tree, tight_path, validate_construction
from .turan import (aks_cut_lower_bound, embed_tree_via_cut, expected_r_cut_fraction,
                    local_search_two_cut, turan_threshold)

__version__ = "0.1.0"
