"""Spectral radius conditions for (a,b)-parity factors."""

from ._core import (
    MAX_VERTICES,
    CapacityError,
    FormatError,
    Graph,
    char_poly,
    clique_join,
    compare_radius,
    complete,
    complete_bipartite,
    cycle,
    decide,
    eta,
    h_extremal,
    kopr_threshold,
    l_family,
    path,
    petersen,
    recognize_h_extremal,
    spectral_radius,
    spectrum,
    star,
    theorem_n_bound,
    verify_lemma_no_factor,
    verify_theorem,
    verify_zhw,
)

__all__ = [name for name in dir() if not name.startswith("_")]
