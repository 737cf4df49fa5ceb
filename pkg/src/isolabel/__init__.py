"""Distance-vector labelling schemes and the isometric-universal graphs they induce."""

from .bits import BitCursor, BitString, LabelDecodeError
from .dv import DvCodebook, dv_decode, dv_encode, dv_pairwise_distance
from .generators import (
    complete_graph,
    cycle_graph,
    enumerate_all_graphs,
    enumerate_connected_graphs,
    path_graph,
    random_graph,
    random_tree,
    star_graph,
)
from .graph import (
    INF,
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    RootedTree,
    VertexOrdering,
    bfs_distances,
    components,
    is_connected,
)
from .hdv import HeavyColoring, dfs_hierarchical_decomposition, hdv_decode, hdv_encode, heavy_coloring
from .hierarchy import HierarchicalDecomposition, HierLabelDecoded, hub_distance
from .schemes import ComponentLabel, component_distance, encode_components, get_scheme
from .separator import (
    AutoOracle,
    BfsLayerOracle,
    CentroidOracle,
    OracleContractError,
    SeparatorOracle,
    SeparatorParts,
    build_separator_decomposition,
    sep_decode,
    sep_encode,
    sep_encode_graph,
)
from .trees import dfs_spanning_tree, tour_ordering, tree_centroid
from .universal import (
    EmbeddingError,
    IsometryReport,
    UniversalGraph,
    build_full_universal,
    build_realized_universal,
    disjoint_union_universal,
    dv_adjacent,
    embed_disjoint,
    embed_labels,
    hdv_adjacent,
    hdv_vertex_valid,
    linf_pseudodistance,
    verify_isometric,
    verify_members,
)
