"""Shipped Hopf pairs and the weighted degree-one elements built from them."""

from functools import lru_cache

from ..graded import Element, Side
from ..hopf import HopfPair
from .nsym_qsym import (
    nsym_qsym_pair,
    nsym_ribbon_coproduct,
    nsym_ribbon_product,
    qsym_fundamental_coproduct,
    qsym_fundamental_product,
)
from .sym import lr_coefficients, lr_count, schur_coproduct, schur_expand_oracle, schur_polynomial, sym_pair

_FACTORIES = {"sym": sym_pair, "nsym-qsym": nsym_qsym_pair}
INSTANCE_KEYS = tuple(_FACTORIES)


@lru_cache(maxsize=None)
def get_instance(key: str) -> HopfPair:
    """Shared instance for ``key`` ("sym" or "nsym-qsym"); its memo tables persist."""
    try:
        return _FACTORIES[key]()
    except KeyError:
        raise KeyError(f"unknown instance {key!r}; choose from {', '.join(INSTANCE_KEYS)}") from None


def canonical_alpha_beta(pair: HopfPair, weights=None):
    """alpha = sum a_i p_i on LOWER and beta = sum b_i s_i on UPPER, over the degree-1 basis.

    ``weights`` is a list of (a_i, b_i), one per degree-1 basis label in
    canonical order; it defaults to all ones. The differential coefficient of
    the resulting graphs is sum a_i b_i.
    """
    labels = pair.basis(1)
    if weights is None:
        weights = [(1, 1)] * len(labels)
    weights = [tuple(w) for w in weights]
    if len(weights) != len(labels):
        raise ValueError(f"{pair.family} has {len(labels)} degree-1 basis elements, got {len(weights)} weights")
    for a, b in weights:
        if not (isinstance(a, int) and isinstance(b, int)) or a < 1 or b < 1:
            raise ValueError(f"weights must be positive integers, got {(a, b)}")
    alpha, beta = Element(), Element()
    for lab, (a, b) in zip(labels, weights):
        alpha = alpha + pair.basis_element(Side.LOWER, lab, a)
        beta = beta + pair.basis_element(Side.UPPER, lab, b)
    return alpha, beta


__all__ = [
    "INSTANCE_KEYS",
    "canonical_alpha_beta",
    "get_instance",
    "lr_coefficients",
    "lr_count",
    "nsym_qsym_pair",
    "nsym_ribbon_coproduct",
    "nsym_ribbon_product",
    "qsym_fundamental_coproduct",
    "qsym_fundamental_product",
    "schur_coproduct",
    "schur_expand_oracle",
    "schur_polynomial",
    "sym_pair",
]
