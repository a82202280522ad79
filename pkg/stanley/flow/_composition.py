from inspect import Signature
from typing import TypeVar

from stanley.exceptions import UnsupportedTransformerArgException
from stanley.flow._base import BaseTransformer
from stanley.flow.transformers import Transformer

_In = TypeVar("_In")
_NextOut = TypeVar("_NextOut")


def _compose_serial(
    transformer1: Transformer, _transformer2: Transformer
) -> Transformer:
    if len(transformer1) == 1:
        transformer1 = transformer1.copy(regenerate_instance_id=True)
    transformer2 = _transformer2.copy(regenerate_instance_id=True)

    input_signature = transformer1.signature()
    output_signature = transformer2.signature()
    new_len = len(transformer1) + len(transformer2)

    class NewTransformer(Transformer[_In, _NextOut]):
        def __init__(self):
            super().__init__()
            self._flow = transformer1._flow + transformer2._flow

        def signature(self) -> Signature:
            return output_signature.replace(
                parameters=list(input_signature.parameters.values())
            )

        def transform(self, data):
            return None

        def __len__(self):
            return new_len

    new_transformer = NewTransformer()
    new_transformer.__class__.__name__ = transformer2.__class__.__name__
    new_transformer._label = transformer2.label
    new_transformer._children = transformer2.children
    return new_transformer


def _compose_nodes(current: BaseTransformer, next_node: object) -> Transformer:
    if not isinstance(current, Transformer):
        raise UnsupportedTransformerArgException(current)  # pragma: no cover
    if isinstance(next_node, Transformer):
        return _compose_serial(current, next_node)
    raise UnsupportedTransformerArgException(next_node)
