import json

import pytest

from jack_vertex.jack.oracle import jack_J
from jack_vertex.lr import make_report
from jack_vertex.partitions import Partition
from jack_vertex.ratfield import ALPHA
from jack_vertex.serialization import (
    SerializedSymFun,
    deserialize_lr_report,
    deserialize_partition,
    deserialize_ratfunc,
    deserialize_symfun,
    dumps,
    load_json,
    serialize_fraction,
    serialize_lr_report,
    serialize_ratfunc,
    serialize_symfun,
)


@pytest.mark.unit
def test_partition_forms():
    assert deserialize_partition([2, 1]) == Partition((2, 1))
    assert deserialize_partition("3,1") == Partition((3, 1))


@pytest.mark.unit
def test_ratfunc_payload_is_integer_lists():
    value = (2 * ALPHA + 1) / (3 * ALPHA)
    assert serialize_ratfunc(value) == {"num": [1, 2], "den": [0, 3]}
    assert deserialize_ratfunc({"num": [1, 2], "den": [0, 3]}) == value
    assert serialize_fraction(0) == {"num": [], "den": [1]}


@pytest.mark.unit
@pytest.mark.parametrize("basis", ["p", "m", "q"])
def test_symfun_payload_restores_the_function(basis):
    J = jack_J(Partition((2, 1)))
    payload = serialize_symfun(J, basis)
    assert payload["basis"] == basis
    assert deserialize_symfun(json.loads(dumps(payload))) == J


@pytest.mark.unit
def test_symfun_terms_are_in_fixed_order():
    payload = serialize_symfun(jack_J(Partition((2, 2))), "p")
    order = [tuple(term["partition"]) for term in payload["terms"]]
    assert order == sorted(order, reverse=True)


@pytest.mark.unit
def test_unknown_basis_tag_is_rejected():
    with pytest.raises(ValueError):
        SerializedSymFun.from_payload({"basis": "s", "terms": []})


@pytest.mark.unit
def test_lr_report_payload():
    report = make_report(
        Partition((1,)),
        Partition((1,)),
        Partition((2,)),
        2 * ALPHA * ALPHA,
        corner_omega=Partition((1,)),
    )
    payload = serialize_lr_report(report)
    assert payload["lambda"] == [2]
    assert payload["value"] == {"num": [0, 0, 2], "den": [1]}
    assert payload["corner_omega"] == [1]
    assert "expected" not in payload
    assert deserialize_lr_report(payload) == report


@pytest.mark.unit
def test_dumps_is_canonical(tmp_path):
    text = dumps({"b": 1, "a": [1, 2]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    path = tmp_path / "doc.json"
    path.write_text(text, encoding="utf-8")
    assert load_json(path) == {"a": [1, 2], "b": 1}
    assert load_json(tmp_path / "missing.json") is None
