"""Signless Laplacian spectral radius (Q-index) toolkit for graphs without odd cycles C_{2k+1}."""

from .bounds import (BoundReport, check_bounds, das_bound, eg_cycle_max_edges,
                     eg_path_max_edges, merris_bound, min_edges_required, snk_lb)
from .canon import canonical_graph6, is_isomorphic
from .constructions import (FamilySpec, center_vertices, complete_graph, construct,
                           cycle_graph, ltk, path_graph, snk, snk_plus)
from .detectors import SubgraphWitness, circumference, cycle_spectrum, has_cycle, has_path
from .formats import (ParseError, parse_edge_list, parse_graph6, read_report, write_graph6,
                      write_report)
from .graph import (Graph, GraphError, build_from_edges, components, degree_stats,
                    delete_vertex, disjoint_union, induced_subgraph, join)
from .spectra import (ConvergenceError, QResult, q_index, q_matrix, rayleigh_edge_sum,
                      snk_q_closed_form)
from .structure import (DominationDiagnostic, PeelTrace, PreconditionError, StructureClass,
                        classify, domination_diagnostic, peel, vertex_cover_le)
from .verify import (SearchConfig, VerificationReport, clique_tail_harness, star_union_harness,
                     local_search, cycle_range_harness, verify_exhaustive, verify_stream)

__version__ = "0.1.0"
