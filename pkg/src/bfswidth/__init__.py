"""BFS width, Cuthill-McKee orderings, adversarial level trees, an exact
bandwidth oracle and distance-oracle graph reconstruction."""
from .exceptions import (DimensionError, Disconnected, FormatError, GraphError, Indeterminate,
                         InvalidEdge, InvalidLayout, InvalidParams, OutOfRange,
                         UnsupportedFormat)
from .graph import (Graph, LinearLayout, build_graph, degree_lower_bound, edge_length,
                    is_connected, layout_bandwidth, local_density_lower_bound)
from .layering import (Layering, bfs_layering, bfs_widths, bfsw, bfsw_from, bfsw_min,
                       distances_from, layer_order_layout)
from .ordering import (MatrixPattern, cuthill_mckee, pattern_bandwidth,
                       pseudo_peripheral_start, reorder_pattern, reverse_cuthill_mckee)
from .generators import (LevelTree, baseline, caterpillar, level_tree, mirrored_level_tree,
                         random_banded, star_subdivision)
from .exact import BandwidthCertificate, exact_bandwidth, is_bandwidth_at_most
from .reconstruction import (OracleSession, ReconstructionResult, open_session, query,
                             reconstruct)
from .io import (read_edge_list, read_graph, read_matrix_market, write_edge_list,
                 write_matrix_market)
from .arcdiagram import ArcDiagram, render_arc_diagram
from .report import AnalysisReport, analyze

__version__ = "0.1.0"
