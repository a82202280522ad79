import inspect
from typing import Any, Callable, Sequence, TypeVar

from stanley.exceptions import UnsupportedEnsurerArgException
from stanley.flow.transformers import Transformer, _execute_flow

__all__ = ["ensure"]

_S = TypeVar("_S")
_U = TypeVar("_U")


class _Ensurer:
    def __init__(self, outcome: Sequence[Callable[[Any], Any]]):
        self.outcome = list(outcome)

    def __call__(self, arg: Transformer[_U, _S]) -> Transformer[_U, _S]:
        if not isinstance(arg, Transformer):
            raise UnsupportedEnsurerArgException(arg)
        return self._guard(arg)

    def _run(self, inner: Callable[[Any], Any], data: Any) -> Any:
        output = inner(data)
        for validator in self.outcome:
            validator(output)
        return output

    def _guard(self, transformer: Transformer) -> Transformer:
        ensurer = self
        if len(transformer) == 1:
            original = transformer.transform

            def transform(_, data):
                return ensurer._run(original, data)

            return transformer.copy(transform, regenerate_instance_id=True)

        flow = transformer._flow

        class Ensured(Transformer[Any, Any]):
            def signature(self) -> inspect.Signature:
                return transformer.signature()

            def transform(self, data):
                return ensurer._run(lambda d: _execute_flow(flow, d), data)

        ensured = Ensured()
        ensured.__class__.__name__ = transformer.__class__.__name__
        ensured._label = transformer.label
        ensured._children = [transformer]
        return ensured


def ensure(*, outcome: Sequence[Callable[[_S], Any]]) -> _Ensurer:
    """
    Attach validators to the output of a step. A validator raises to reject;
    for a composed flow they run once, after the whole flow.

    Example:
        Stopping a run at a depth beyond the number of variables::

            def depth_in_range(run: Run) -> None:
                depth = run.report.depth_oracle
                if depth is not None and not 0 <= depth <= run.m:
                    check = Check.claim("depth_in_range", False, f"depth {depth}")
                    raise TheoremViolation(check, run.instance)

            @ensure(outcome=[depth_in_range])
            @transformer
            def oracle_depth(run: Run) -> Run:
                ...
    """
    if not outcome:
        raise UnsupportedEnsurerArgException("no validators given")
    return _Ensurer(outcome)
