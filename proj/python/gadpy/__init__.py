"""Point-cloud singularity detection via local persistent homology."""

from ._core import (
    barcode,
    bottleneck_distance,
    detect,
    generate,
    label_names,
    local_svd_scores,
)

__all__ = [
    "barcode",
    "bottleneck_distance",
    "detect",
    "generate",
    "label_names",
    "local_svd_scores",
]
