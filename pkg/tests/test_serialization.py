import json
import random

from ncgq.algebra import QuantumAlgebra
from ncgq.calculus import Calculus, DiffForm
from ncgq.scalars import GaussianRational


def test_algebra_element_wire_roundtrip():
    alg = QuantumAlgebra("i")
    rng = random.Random(4)
    for _ in range(25):
        coeffs = {}
        for _ in range(3):
            coeffs[(rng.randrange(4), rng.randrange(4))] = GaussianRational(
                rng.randrange(-9, 10), rng.randrange(-9, 10))
        x = alg.element(coeffs)
        blob = json.dumps(x.to_json())
        assert alg.from_json(json.loads(blob)) == x


def test_algebra_element_wire_format_shape():
    alg = QuantumAlgebra("i")
    x = alg.monomial(2, 3).scale(GaussianRational("-11/17", "7/17"))
    assert x.to_json() == [{"monomial": "a^2 b^3", "coeff": "-11/17+7/17*i"}]


def test_diff_form_wire_format():
    cal = Calculus(QuantumAlgebra("i"))
    x = cal.wedge(cal.basis_form("c"), cal.basis_form("d"))
    doc = x.to_json()
    assert doc["degree"] == 2
    assert doc["terms"] == [{"coeff": [{"monomial": "1", "coeff": "1"}],
                             "wedge": ["e_c", "e_d"]}]


def test_diff_form_with_function_coefficient():
    cal = Calculus(QuantumAlgebra("i"))
    alg = cal.algebra
    x = DiffForm(cal, {("b",): alg.alpha * alg.beta})
    doc = x.to_json()
    assert doc["degree"] == 1
    assert doc["terms"][0]["wedge"] == ["e_b"]
    assert doc["terms"][0]["coeff"] == [{"monomial": "a b", "coeff": "1"}]
