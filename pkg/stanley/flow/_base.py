import copy
import inspect
import traceback
import types
import uuid
from abc import ABC, abstractmethod
from inspect import Signature
from typing import Any, Callable, Generic, Optional, TypeVar, cast

from typing_extensions import Self

__all__ = ["BaseTransformer", "TransformerException", "Flow"]

_In = TypeVar("_In", contravariant=True)
_Out = TypeVar("_Out", covariant=True)


class TransformerException(Exception):
    """
    Attached as :code:`__cause__` to an exception raised inside a step, naming the
    step and the line it failed on. The original exception is what propagates.
    """

    def __init__(
        self,
        internal_exception: Exception,
        raiser_transformer: "BaseTransformer",
        message: Optional[str] = None,
    ):
        self._internal_exception = internal_exception
        self.raiser_transformer = raiser_transformer
        self._traceback = internal_exception.__traceback__
        internal_exception.__cause__ = self
        super().__init__(message)

    @property
    def internal_exception(self) -> Exception:
        return self._internal_exception.with_traceback(self._traceback)


def catch_transformer_exception(
    exception: Exception, raiser_transformer: "BaseTransformer"
) -> TransformerException:
    frames = [
        frame
        for frame in traceback.extract_tb(exception.__traceback__)
        if frame.name == "transform"
    ]
    message = f'in step "{raiser_transformer.label}"'
    if frames:
        frame = frames[-1]
        message = (
            f'\n  File "{frame.filename}", line {frame.lineno}, '
            f'in step "{raiser_transformer.label}"\n    >> {frame.line}'
        )
    return TransformerException(exception, raiser_transformer, message)


Flow = list["BaseTransformer"]


class BaseTransformer(Generic[_In, _Out], ABC):
    def __init__(self):
        self._children: list["BaseTransformer"] = []
        self.id = uuid.uuid4()
        self.instance_id = uuid.uuid4()
        self._label = self.__class__.__name__
        self._flow: Flow = [self]

    @property
    def label(self) -> str:
        """
        The function name for steps made with :code:`@transformer`, the class name
        otherwise. Used in error messages and reports.
        """
        return self._label

    @property
    def children(self) -> list["BaseTransformer"]:
        """Steps wrapped by this one, such as the two branches of a condition."""
        return self._children

    def __hash__(self) -> int:
        return hash(self.id)

    def __eq__(self, other):
        if isinstance(other, BaseTransformer):
            return self.id == other.id
        return NotImplemented

    def copy(
        self: Self,
        transform: Optional[Callable[[Self, Any], Any]] = None,
        regenerate_instance_id: bool = False,
    ) -> Self:
        copied: Self = copy.copy(self)
        if transform is not None:
            setattr(copied, "transform", types.MethodType(transform, copied))

        old_instance_id = self.instance_id
        if regenerate_instance_id:
            copied.instance_id = uuid.uuid4()
        copied._flow = [
            (
                cast(BaseTransformer, copied)
                if step.instance_id == old_instance_id
                else step
            )
            for step in self._flow
        ]
        return copied

    @abstractmethod
    def signature(self) -> Signature:
        """Function-like signature of the step."""

    def _signature(self, transform_method: str = "transform") -> Signature:
        signature = inspect.signature(getattr(self, transform_method))
        parameters = list(signature.parameters.values())[:1]
        return signature.replace(parameters=parameters)

    @property
    def input_type(self) -> Any:
        parameters = list(self.signature().parameters.values())
        if parameters:
            return parameters[0].annotation
        return None

    @property
    def output_type(self) -> Any:
        return self.signature().return_annotation

    @property
    def input_annotation(self) -> str:
        return _format_annotation(self.input_type)

    @property
    def output_annotation(self) -> str:
        return _format_annotation(self.output_type)

    def __len__(self):
        return 1


def _format_annotation(annotation: Any) -> str:
    if annotation is None or annotation is inspect.Signature.empty:
        return "Any"
    if isinstance(annotation, type):
        return annotation.__name__
    return str(annotation).replace("typing.", "")
