from typing import Callable, Generic, Optional, TypeVar, Union

from stanley.exceptions import UnsupportedTransformerArgException
from stanley.flow.transformers import Transformer

__all__ = ["If", "condition"]

In = TypeVar("In")
ThenOut = TypeVar("ThenOut")
ElseOut = TypeVar("ElseOut")


class _Conditioner(Transformer[In, Union[ThenOut, ElseOut]]):
    def __init__(
        self,
        predicate: Callable[[In], bool],
        then_transformer: Transformer[In, ThenOut],
        else_transformer: Transformer[In, ElseOut],
    ):
        super().__init__()
        self._predicate = predicate
        self._then_transformer = then_transformer
        self._else_transformer = else_transformer
        self._children = [then_transformer, else_transformer]

    def transform(self, data: In) -> Union[ThenOut, ElseOut]:
        if self._predicate(data):
            return self._then_transformer(data)
        return self._else_transformer(data)


class _IfThen(Generic[In, ThenOut]):
    def __init__(
        self,
        predicate: Callable[[In], bool],
        then_transformer: Transformer[In, ThenOut],
        name: str,
    ):
        self._predicate = predicate
        self._then_transformer = then_transformer
        self._name = name

    def Else(
        self, else_transformer: Transformer[In, ElseOut]
    ) -> Transformer[In, Union[ThenOut, ElseOut]]:
        if not isinstance(else_transformer, Transformer):
            raise UnsupportedTransformerArgException(else_transformer)
        conditioner: _Conditioner = _Conditioner(
            self._predicate, self._then_transformer, else_transformer
        )
        conditioner._label = self._name
        return conditioner


class If(Generic[In]):
    """
    Start a branch.

    Example:
        Send instances given by general monomials through Fröberg's criterion::

            @condition
            def is_general(run: Run) -> bool:
                return run.instance.general is not None

            route = is_general.Then(linres_route).Else(main_route)

    Args:
        condition: callable returning a boolean.
        name: label of the resulting step; defaults to the callable's name.
    """

    def __init__(self, condition: Callable[[In], bool], name: Optional[str] = None):
        self._condition = condition
        self._name: str = name or condition.__name__

    def Then(self, next_transformer: Transformer[In, ThenOut]) -> _IfThen[In, ThenOut]:
        if not isinstance(next_transformer, Transformer):
            raise UnsupportedTransformerArgException(next_transformer)
        return _IfThen(self._condition, next_transformer, self._name)


def condition(func: Callable[[In], bool]) -> If[In]:
    """Build an :class:`If` named after :code:`func`."""
    return If(func, func.__name__)
