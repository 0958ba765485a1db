"""Normal partitions of cubic graphs: construction, search and validation."""

from ._copnc import (
    Error,
    Graph,
    Partition,
    Trail,
    bipartite_triple,
    certificate_json,
    check_certificate,
    chromatic_index,
    conformal_triple,
    edge_coloring,
    find_triple,
    flower_triple,
    from_matching,
    generate,
    goldberg_triple,
    is_bipartite,
    is_bridgeless,
    make_partition,
    parse_edge_list,
    parse_graph6,
    perfect_matchings,
    petersen_triple,
    resolve_graph,
    switch_class,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
