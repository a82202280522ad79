import inspect
import warnings
from inspect import Signature
from types import FunctionType
from typing import Callable, TypeVar, cast

from stanley.flow.transformers import Transformer

__all__ = ["transformer"]

A = TypeVar("A")
S = TypeVar("S")


def transformer(func: Callable[[A], S]) -> Transformer[A, S]:
    """
    Turn a one-argument function into a step. Functions with more parameters
    still work but trigger a :code:`RuntimeWarning`.

    Example:
        The step that checks the depth of an instance against its Stanley depth::

            @transformer
            def stanley_inequalities(run: Run) -> Run:
                ...
    """
    func_signature = inspect.signature(func)

    if len(func_signature.parameters) > 1:
        warnings.warn(
            "Only one parameter is allowed on steps. "
            f"Function '{func.__name__}' has the following signature: {func_signature}."
            " Bundle the data in a dataclass such as Run.",
            category=RuntimeWarning,
        )

    class LambdaTransformer(Transformer[A, S]):
        __doc__ = func.__doc__
        __annotations__ = cast(FunctionType, func).__annotations__

        def signature(self) -> Signature:
            return func_signature

        def transform(self, data):
            return func(data)

    lambda_transformer = LambdaTransformer()
    lambda_transformer.__class__.__name__ = func.__name__
    lambda_transformer._label = func.__name__
    return lambda_transformer
