from abc import ABC, abstractmethod
from inspect import Signature
from typing import Any, TypeVar

from stanley.flow._base import BaseTransformer, Flow, catch_transformer_exception

__all__ = ["Transformer"]

_I = TypeVar("_I", contravariant=True)
_O = TypeVar("_O", covariant=True)

_Next = TypeVar("_Next")


def _execute_flow(flow: Flow, arg: Any) -> Any:
    result = arg
    for op in flow:
        if isinstance(op, Transformer):
            result = op._safe_transform(result)
        else:
            raise NotImplementedError()
    return result


class Transformer(BaseTransformer[_I, _O], ABC):
    """
    A single-input step of a verification pipeline, taking :code:`_I` to
    :code:`_O`. Steps compose with :code:`>>`.

    Example:
        A step that computes the depth of an instance::

            class DepthStep(Transformer[Instance, int]):
                def transform(self, data: Instance) -> int:
                    return depth_quotient(data.ideal)
    """

    @abstractmethod
    def transform(self, data: _I) -> _O:
        """The step logic."""

    def signature(self) -> Signature:
        return self._signature()

    def __repr__(self):
        if len(self) == 1:
            return (
                f"{self.input_annotation}"
                f" -> ({self.label})"
                f" -> {self.output_annotation}"
            )
        return (
            f"{self.input_annotation}"
            f" -> ({len(self)} steps omitted)"
            f" -> {self.output_annotation}"
        )

    def _safe_transform(self, data: _I) -> _O:
        try:
            return self.transform(data)
        except Exception as exception:
            transform_exception = catch_transformer_exception(exception, self)
        raise transform_exception.internal_exception

    def __call__(self, data: _I) -> _O:
        return _execute_flow(self._flow, data)

    def __rshift__(
        self, next_node: "Transformer[_O, _Next]"
    ) -> "Transformer[_I, _Next]":  # pragma: no cover
        raise NotImplementedError()
