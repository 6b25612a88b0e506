"""Exact counting and small-n experiments for generalized Turan problems on odd cycles."""

__version__ = "0.1.0"

from .canon import CanonicalForm, canonical_form, canonical_graph, is_isomorphic
from .enumerate import all_graphs, all_graphs_filtered, random_graphs
from .graph import (Graph, GraphError, blowup, complete_graph, cycle_graph, make_graph,
                    neighbors, turan_graph)
from .hom import (BudgetExceeded, CountOverflow, DegreeProfile, Pattern, copy_count,
                  count_hom, count_inj, edit_distance_to_colorable, is_colorable, is_free,
                  q_degree_profile)
