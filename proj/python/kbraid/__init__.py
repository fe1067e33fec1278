"""Free k-braid groups G_n^k and invariants of point motions."""

import json

from ._kbraid import (
    DEFAULT_BUDGET,
    CyclicWord,
    KbraidError,
    Word,
    are_conjugate,
    are_equal,
    artin_neighbors,
    canonical_form,
    closed_invariant,
    complexity,
    generators,
    invariant,
    permutation,
    reduce,
    relabel,
    relations,
    render_dot,
    render_svg,
    scan,
)


def lower_bound(braid, n, budget=DEFAULT_BUDGET):
    """Trisecant certificate of an Artin word as a dict."""
    from ._kbraid import lower_bound as _lower_bound

    return json.loads(_lower_bound(braid, n, budget))


__all__ = [
    "DEFAULT_BUDGET",
    "CyclicWord",
    "KbraidError",
    "Word",
    "are_conjugate",
    "are_equal",
    "artin_neighbors",
    "canonical_form",
    "closed_invariant",
    "complexity",
    "generators",
    "invariant",
    "lower_bound",
    "permutation",
    "reduce",
    "relabel",
    "relations",
    "render_dot",
    "render_svg",
    "scan",
]
