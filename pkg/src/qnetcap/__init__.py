"""End-to-end capacities of quantum repeater chains and networks.

Exact single-path (widest-path) and multi-path (max-flow) capacities for
networks of distillable channels, closed-form repeater-chain figures of
merit, and a brute-force oracle certifying the route/cut dualities.
"""

from .chains import (
    ChainCapacity,
    asymptotic_loss_dominant,
    asymptotic_repeater_dominant,
    chain_capacity,
    equidistant_lossy_capacity,
    max_link_loss_for_rate,
    min_repeaters_for_rate,
    multiband_chain_capacity,
)
from .channels import (
    CAPACITY_TOL,
    CHANNEL_KINDS,
    ChannelSpec,
    amplifier,
    binary_entropy,
    capacity,
    db_to_transmissivity,
    dephasing,
    erasure,
    fiber_transmissivity,
    lossy,
    multiband_lossy,
    shannon_entropy,
    transmissivity_to_db,
)
from .errors import (
    InvalidParameter,
    NoRoute,
    ParameterRegimeWarning,
    ParseError,
    QnetcapError,
    TooLarge,
    UnknownEdge,
    ValidationError,
)
from .multi_path import (
    Arc,
    FlowNetwork,
    FlowReport,
    build_flow_network,
    max_flow,
    multi_path_capacity,
)
from .network import (
    Cut,
    Edge,
    QNetwork,
    Route,
    cut_multi_edge_value,
    cut_single_edge_value,
    edge_capacity,
    is_connected,
    make_cut,
    parse_network,
    serialize_network,
)
from .oracle import (
    BruteForceSinglePath,
    CutEnumeration,
    CutRecord,
    brute_multi_path_capacity,
    brute_single_path_capacity,
    enumerate_cuts,
    enumerate_simple_routes,
)
from .single_path import (
    RouteReport,
    max_spanning_tree,
    min_single_edge_cut,
    tree_route_capacity,
    widest_path,
)

__version__ = "0.1.0"

__all__ = [
    "ChainCapacity",
    "ChannelSpec",
    "CAPACITY_TOL",
    "CHANNEL_KINDS",
    "Arc",
    "BruteForceSinglePath",
    "Cut",
    "CutEnumeration",
    "CutRecord",
    "Edge",
    "FlowNetwork",
    "FlowReport",
    "InvalidParameter",
    "NoRoute",
    "ParameterRegimeWarning",
    "ParseError",
    "QNetwork",
    "QnetcapError",
    "Route",
    "RouteReport",
    "TooLarge",
    "UnknownEdge",
    "ValidationError",
    "amplifier",
    "asymptotic_loss_dominant",
    "asymptotic_repeater_dominant",
    "binary_entropy",
    "brute_multi_path_capacity",
    "brute_single_path_capacity",
    "build_flow_network",
    "capacity",
    "chain_capacity",
    "cut_multi_edge_value",
    "cut_single_edge_value",
    "db_to_transmissivity",
    "dephasing",
    "edge_capacity",
    "enumerate_cuts",
    "enumerate_simple_routes",
    "equidistant_lossy_capacity",
    "erasure",
    "fiber_transmissivity",
    "is_connected",
    "lossy",
    "make_cut",
    "max_flow",
    "max_link_loss_for_rate",
    "max_spanning_tree",
    "min_repeaters_for_rate",
    "min_single_edge_cut",
    "multi_path_capacity",
    "multiband_chain_capacity",
    "multiband_lossy",
    "parse_network",
    "serialize_network",
    "shannon_entropy",
    "transmissivity_to_db",
    "tree_route_capacity",
    "widest_path",
]
