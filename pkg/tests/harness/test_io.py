import unittest

from pydantic import ValidationError

from stanley.clutters import d_complement, edge_ideal
from stanley.exceptions import InvalidWitnessError
from stanley.harness.instances import EXAMPLE_ONE_WITNESS, Instance, Source
from stanley.harness.io import (
    BundleModel,
    ClutterModel,
    GeneralIdealModel,
    IdealModel,
    InstanceModel,
    WitnessModel,
)
from stanley.harness.report import Check
from stanley.ideals import SqfIdeal, polarize
from tests.lib.corpora import EXAMPLE_ONE, PATH


class TestIdealModels(unittest.TestCase):
    def test_non_minimal_generators_are_reduced(self):
        model = IdealModel(n=3, generators=[[1, 2], [1, 2, 3]])
        self.assertEqual(model.to_domain(), SqfIdeal.from_supports(3, [[1, 2]]))

    def test_from_domain(self):
        model = IdealModel.from_domain(EXAMPLE_ONE)
        self.assertEqual(model.generators, [[1, 2], [1, 3], [2, 3, 4]])
        self.assertEqual(model.to_domain(), EXAMPLE_ONE)

    def test_validation(self):
        negative = {"n": -1, "generators": []}
        self.assertRaises(ValidationError, lambda: IdealModel.model_validate(negative))
        self.assertRaises(ValidationError, lambda: IdealModel.model_validate({"n": 2}))

    def test_general_monomials_as_exps_objects(self):
        model = GeneralIdealModel.model_validate(
            {"n": 2, "generators": [{"exps": [2, 1]}]}
        )
        (monomial,) = model.to_domain()
        self.assertEqual(monomial.exponents, (2, 1))
        dumped = GeneralIdealModel.from_domain(model.to_domain(), 2).model_dump()
        self.assertEqual(dumped, {"n": 2, "generators": [{"exps": [2, 1]}]})

    def test_general_monomials_as_bare_lists(self):
        model = GeneralIdealModel.model_validate({"n": 2, "generators": [[2, 0]]})
        self.assertEqual(model.generators[0].exps, [2, 0])
        negative = {"n": 2, "generators": [{"exps": [-1, 0]}]}
        self.assertRaises(
            ValidationError, lambda: GeneralIdealModel.model_validate(negative)
        )

    def test_clutter_with_inactive_vertices(self):
        model = ClutterModel(n=4, edges=[[1, 2]], active=[1, 2, 3])
        clutter = model.to_domain()
        self.assertEqual(clutter.vertices, (1, 2, 3))
        self.assertEqual(ClutterModel.from_domain(clutter).active, [1, 2, 3])
        self.assertIsNone(ClutterModel.from_domain(PATH).active)


class TestWitnessModel(unittest.TestCase):
    def test_bare_list_means_indices(self):
        witness = WitnessModel.model_validate(EXAMPLE_ONE_WITNESS).to_domain(4)
        self.assertEqual(witness.r, 2)
        self.assertEqual(witness.as_index_lists(), EXAMPLE_ONE_WITNESS)

    def test_exponent_vectors(self):
        data = {
            "encoding": "exponents",
            "levels": [[[1, 1, 0, 0]], [[1, 0, 1, 0], [0, 1, 1, 1]]],
        }
        witness = WitnessModel.model_validate(data).to_domain(4)
        self.assertEqual(witness.as_index_lists(), EXAMPLE_ONE_WITNESS)

    def test_bare_exponent_vectors(self):
        data = [[[1, 1, 0, 0]], [[1, 0, 1, 0], [0, 1, 1, 1]]]
        model = WitnessModel.model_validate(data)
        self.assertEqual(model.encoding, "exponents")
        self.assertEqual(model.to_domain(4).as_index_lists(), EXAMPLE_ONE_WITNESS)

    def test_bare_all_ones_vector_reads_as_exponents(self):
        model = WitnessModel.model_validate([[[1, 1]]])
        self.assertEqual(model.encoding, "exponents")
        self.assertEqual(model.to_domain(2).as_index_lists(), [[[1, 2]]])

    def test_exponent_vectors_must_be_squarefree(self):
        data = {"encoding": "exponents", "levels": [[[2, 0]]]}
        model = WitnessModel.model_validate(data)
        self.assertRaises(InvalidWitnessError, lambda: model.to_domain(2))


class TestInstanceModel(unittest.TestCase):
    def test_ideal_from_clutter(self):
        model = InstanceModel(id="path", clutter=ClutterModel.from_domain(PATH), d=2)
        instance = model.to_domain()
        self.assertEqual(instance.ideal, edge_ideal(d_complement(PATH, 2)))
        self.assertIs(instance.source, Source.FILE)

    def test_ideal_from_polarization(self):
        general = GeneralIdealModel(n=2, generators=[[2, 0], [1, 1]])
        instance = InstanceModel(id="q", general=general).to_domain()
        self.assertEqual(instance.ideal, polarize(general.to_domain(), 2))

    def test_needs_an_ideal(self):
        self.assertRaises(ValidationError, lambda: InstanceModel(id="empty"))
        self.assertRaises(
            ValidationError,
            lambda: InstanceModel(id="no-d", clutter=ClutterModel.from_domain(PATH)),
        )

    def test_inconsistent_ideal(self):
        model = InstanceModel(
            id="bad",
            ideal=IdealModel(n=3, generators=[[1]]),
            clutter=ClutterModel.from_domain(PATH),
            d=2,
        )
        self.assertRaises(ValueError, model.to_domain)

    def test_bundle_survives_json(self):
        instance = Instance.of_clutter("path", Source.GENERATED, PATH, 2)
        check = Check.equal("values", 1, 2)
        dumped = check.model_dump(mode="json")
        bundle = BundleModel.from_domain("main", instance, dumped)
        restored = BundleModel.model_validate_json(bundle.model_dump_json())
        self.assertEqual(restored.to_domain(), instance)
        self.assertEqual(Check.model_validate(restored.check), check)
