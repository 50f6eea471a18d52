import logging

from . import exact_algebra, factorial, gamma_ring, lambda_ring, laurent_models, partitions, pieri_paths, tableaux
from .gamma_ring import BasisExpansion, BasisTag, GammaElement, structure_constants, to_basis, usymp_P, usymp_Q
from .lambda_ring import LambdaElement
from .laurent_models import SpecializationContext, specialize
from .partitions import Partition, SkewShiftedShape, StrictPartition

__version__ = "0.1.0"

logger = logging.getLogger("sympq")


__all__ = [
    "BasisExpansion",
    "BasisTag",
    "GammaElement",
    "LambdaElement",
    "Partition",
    "SkewShiftedShape",
    "SpecializationContext",
    "StrictPartition",
    "exact_algebra",
    "factorial",
    "gamma_ring",
    "lambda_ring",
    "laurent_models",
    "partitions",
    "pieri_paths",
    "specialize",
    "structure_constants",
    "tableaux",
    "to_basis",
    "usymp_P",
    "usymp_Q",
]
