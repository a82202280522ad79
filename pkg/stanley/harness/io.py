"""
JSON file formats. Every model converts to and from the domain types with
:code:`to_domain` and :code:`from_domain`; index lists are 1-based and sorted.
"""

from typing import Annotated, Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from stanley._bits import MAX_VARIABLES, full_mask, indices_of
from stanley.clutters import Clutter
from stanley.config import Limits
from stanley.exceptions import InvalidWitnessError
from stanley.harness.instances import Instance, Source
from stanley.ideals import GenMonomial, SqfIdeal, SqfMonomial, minimalize, polarize
from stanley.schmitt_vogel import SvWitness

__all__ = [
    "IdealModel",
    "ExponentsModel",
    "GeneralIdealModel",
    "ClutterModel",
    "WitnessModel",
    "InstanceModel",
    "BundleModel",
]


class IdealModel(BaseModel):
    """
    A squarefree ideal as generator supports. Non-minimal generators are
    accepted and reduced on conversion.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, le=MAX_VARIABLES)
    generators: list[list[int]]

    def to_domain(self) -> SqfIdeal:
        return minimalize(
            (SqfMonomial.from_indices(self.n, g) for g in self.generators), self.n
        )

    @classmethod
    def from_domain(cls, ideal: SqfIdeal) -> "IdealModel":
        return cls(n=ideal.n, generators=ideal.supports())


class ExponentsModel(BaseModel):
    """One monomial as :code:`{"exps": [...]}`; a bare exponent list is accepted."""

    model_config = ConfigDict(frozen=True)

    exps: list[Annotated[int, Field(ge=0)]]

    @model_validator(mode="before")
    @classmethod
    def _bare_exponents(cls, data: Any) -> Any:
        if isinstance(data, list):
            return {"exps": data}
        return data


class GeneralIdealModel(BaseModel):
    """A monomial ideal as exponent vectors of length :code:`n`."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, le=MAX_VARIABLES)
    generators: list[ExponentsModel]

    def to_domain(self) -> tuple[GenMonomial, ...]:
        return tuple(GenMonomial(self.n, tuple(g.exps)) for g in self.generators)

    @classmethod
    def from_domain(
        cls, monomials: "tuple[GenMonomial, ...] | list[GenMonomial]", n: int
    ) -> "GeneralIdealModel":
        return cls(
            n=n, generators=[ExponentsModel(exps=list(m.exponents)) for m in monomials]
        )


class ClutterModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, le=MAX_VARIABLES)
    edges: list[list[int]]
    active: Optional[list[int]] = None

    def to_domain(self) -> Clutter:
        return Clutter.from_edges(self.n, self.edges, self.active)

    @classmethod
    def from_domain(cls, clutter: Clutter) -> "ClutterModel":
        active = None
        if clutter.active != full_mask(clutter.n_vertices):
            active = list(indices_of(clutter.active))
        return cls(n=clutter.n_vertices, edges=clutter.edge_lists(), active=active)


def _reads_as_indices(vector: Any) -> bool:
    """A 1-based index set is strictly increasing with no zero."""
    if not isinstance(vector, list) or not all(isinstance(i, int) for i in vector):
        return True
    increasing = all(a < b for a, b in zip(vector, vector[1:]))
    return increasing and all(i > 0 for i in vector)


class WitnessModel(BaseModel):
    """
    Levels of a Schmitt-Vogel witness, each a list of monomials given either as
    1-based index sets or as exponent vectors. A bare JSON list of levels is read
    as exponent vectors when some vector holds a zero or is not strictly
    increasing, and as index sets otherwise.
    :code:`{"encoding": ..., "levels": [...]}` names the encoding explicitly.
    """

    model_config = ConfigDict(frozen=True)

    encoding: Literal["indices", "exponents"] = "indices"
    levels: list[list[list[int]]]

    @model_validator(mode="before")
    @classmethod
    def _bare_levels(cls, data: Any) -> Any:
        if isinstance(data, list):
            vectors = [
                vector
                for level in data
                if isinstance(level, list)
                for vector in level
            ]
            indices = all(_reads_as_indices(vector) for vector in vectors)
            encoding = "indices" if indices else "exponents"
            return {"encoding": encoding, "levels": data}
        return data

    def to_domain(self, n: int) -> SvWitness:
        if self.encoding == "indices":
            return SvWitness.from_supports(n, self.levels)
        levels = []
        for number, level in enumerate(self.levels, start=1):
            monomials = []
            for exponents in level:
                monomial = GenMonomial(n, tuple(exponents))
                if not monomial.is_squarefree:
                    raise InvalidWitnessError(
                        f"{monomial} in level {number} is not squarefree"
                    )
                monomials.append(monomial.to_squarefree())
            levels.append(frozenset(monomials))
        return SvWitness(n, tuple(levels))

    @classmethod
    def from_domain(cls, witness: SvWitness) -> "WitnessModel":
        return cls(levels=witness.as_index_lists())


class InstanceModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    source: Source = Source.FILE
    ideal: Optional[IdealModel] = None
    clutter: Optional[ClutterModel] = None
    d: Optional[int] = Field(default=None, ge=1)
    general: Optional[GeneralIdealModel] = None

    @model_validator(mode="after")
    def _has_an_ideal(self) -> "InstanceModel":
        if self.ideal is None and (self.clutter is None or self.d is None):
            if self.general is None:
                raise ValueError(
                    "An instance needs an ideal, a general ideal, or a clutter with d"
                )
        return self

    def to_domain(self) -> Instance:
        """
        Missing ideals are derived: from :code:`clutter` and :code:`d`, else by
        polarizing :code:`general`.

        Raises:
            ValueError: the stored ideal disagrees with the clutter.
        """
        clutter = self.clutter.to_domain() if self.clutter else None
        general = self.general.to_domain() if self.general else None
        if self.ideal is not None:
            ideal = self.ideal.to_domain()
        elif clutter is not None and self.d is not None:
            return Instance.of_clutter(self.id, self.source, clutter, self.d)
        else:
            assert general is not None and self.general is not None
            ideal = polarize(general, self.general.n)
        instance = Instance(self.id, self.source, ideal, clutter, self.d, general)
        if not instance.is_consistent():
            raise ValueError(
                f"Instance {self.id}: {ideal} is not the edge ideal of the "
                f"{self.d}-complement of its clutter"
            )
        return instance

    @classmethod
    def from_domain(cls, instance: Instance) -> "InstanceModel":
        general = None
        if instance.general is not None:
            ambient = instance.general[0].n if instance.general else 0
            general = GeneralIdealModel.from_domain(instance.general, ambient)
        return cls(
            id=instance.id,
            source=instance.source,
            ideal=IdealModel.from_domain(instance.ideal),
            clutter=(
                ClutterModel.from_domain(instance.clutter)
                if instance.clutter is not None
                else None
            ),
            d=instance.d,
            general=general,
        )


class BundleModel(BaseModel):
    """
    A self-contained counterexample: the failing instance, the check that
    failed, the certificates computed before the failure and the settings to
    replay it with.
    """

    model_config = ConfigDict(frozen=True)

    command: Literal["main", "smain", "linres", "examples"]
    instance: InstanceModel
    check: dict[str, Any]
    certificates: dict[str, Any] = Field(default_factory=dict)
    limits: Limits = Field(default_factory=Limits.default)
    trim: bool = False

    @classmethod
    def from_domain(
        cls,
        command: str,
        instance: Instance,
        check: dict[str, Any],
        certificates: Optional[dict[str, Any]] = None,
        limits: Optional[Limits] = None,
        trim: bool = False,
    ) -> "BundleModel":
        return cls(
            command=command,  # type: ignore[arg-type]
            instance=InstanceModel.from_domain(instance),
            check=check,
            certificates=certificates or {},
            limits=limits or Limits.default(),
            trim=trim,
        )

    def to_domain(self) -> Instance:
        return self.instance.to_domain()
