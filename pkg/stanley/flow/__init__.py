"""
Typed single-input steps and their composition, used to write the verification
pipelines. Exceptions raised inside a step propagate unchanged, with a
:class:`TransformerException` naming the step as their cause.
"""

from stanley.exceptions import (
    UnsupportedEnsurerArgException,
    UnsupportedTransformerArgException,
)
from stanley.flow._base import BaseTransformer, TransformerException
from stanley.flow._composition import _compose_nodes
from stanley.flow._ensure import ensure
from stanley.flow.conditional import If, condition
from stanley.flow.functional import transformer
from stanley.flow.transformers import Transformer

__all__ = [
    "BaseTransformer",
    "Transformer",
    "TransformerException",
    "transformer",
    "If",
    "condition",
    "ensure",
    "UnsupportedTransformerArgException",
    "UnsupportedEnsurerArgException",
]

setattr(Transformer, "__rshift__", _compose_nodes)
