"""Exact q-series and partition bijections for Rogers-Ramanujan type identities."""

from .catalog import (
    IdentitySpec,
    VerificationReport,
    catalog_list,
    eval_product_side,
    eval_sum_side,
    lookup,
    verify_identity,
)
from .families import FamilyId, SignedTriple, enumerate_family, is_member, weighted_gf
from .partitions import Label, LabeledPartition
from .series import PolyXY, QSeries

__all__ = [
    "FamilyId", "IdentitySpec", "Label", "LabeledPartition", "PolyXY", "QSeries",
    "SignedTriple", "VerificationReport", "catalog_list", "enumerate_family",
    "eval_product_side", "eval_sum_side", "is_member", "lookup", "verify_identity",
    "weighted_gf",
]
