"""Cycle spectra of cubic plane graphs: embeddings, gap constructions and certifying search."""

from .constructions import (
    catalog,
    make_dn,
    make_fan_ring,
    make_gnk,
    make_hk,
    make_prism,
    random_c3cp,
    replace_edge,
    replace_matching,
    triangle_expand,
)
from .embedding import (
    Embedding,
    assemble,
    build_embedding,
    connectivity_level,
    delete_edges,
    faces,
    fingerprint,
    mirror,
    suppress_degree2,
    two_edge_cuts,
)
from .spectrum import (
    circumference,
    enumerate_spectrum,
    exists_cycle_in_range,
    gap_report,
    girth,
    shortest_cycle_in_range,
)
from .theorem_lab import (
    audit_counts,
    check_abc,
    long_face_or_midcycle,
    reduce_glue,
    verify_interval_theorem,
)

__version__ = "0.1.0"
