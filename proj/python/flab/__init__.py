"""Fibring decisions for finitely presented 3-manifold groups."""

from ._core import (
    FlabError,
    Presentation,
    abelianization,
    alexander_polynomial,
    brown_quotient,
    brown_rank1,
    brown_rank2,
    corank_bounds,
    coset_index,
    cyclic_cover,
    decide_fibred,
    dehn_fill,
    generates_free_group,
    is_basis,
    low_index_counts,
    make_presentation,
    parse,
    parse_all,
    plot_svg,
    run_batch,
)

__all__ = [
    "FlabError",
    "Presentation",
    "abelianization",
    "alexander_polynomial",
    "brown_quotient",
    "brown_rank1",
    "brown_rank2",
    "corank_bounds",
    "coset_index",
    "cyclic_cover",
    "decide_fibred",
    "dehn_fill",
    "generates_free_group",
    "is_basis",
    "low_index_counts",
    "make_presentation",
    "parse",
    "parse_all",
    "plot_svg",
    "run_batch",
]
