"""Smoke test for the crlie Python module.

Build and install first, e.g.
    cd crates/py && maturin build --release -o dist && pip install dist/crlie-*.whl
"""

from fractions import Fraction

import crlie


def main():
    ids = [entry_id for entry_id, _ in crlie.catalog_list()]
    assert "so3_cr" in ids and "so3_bad_metric" in ids

    so3 = crlie.LieAlgebra.named("so3")
    assert so3.dim == 3
    assert so3.bracket(["1", "0", "0"], ["0", "1", "0"]) == ["0", "0", "1"]
    assert so3.is_semisimple()
    killing = [[Fraction(x) for x in row] for row in so3.killing_form()]
    assert killing == [[-2, 0, 0], [0, -2, 0], [0, 0, -2]]
    # [e1^e2, e1^e2] = 2 e1^e2^e3
    assert so3.schouten(["1", "0", "0"], ["1", "0", "0"]) == ["2"]

    heis = crlie.LieAlgebra(["x", "y", "z"], [(1, 2, ["0", "0", "1"])])
    assert not heis.is_semisimple()
    assert heis.center() == [["0", "0", "1"]]

    doc = crlie.Document.from_catalog("so3_cr")
    report = doc.check()
    assert report.passed, report.to_text()
    again = crlie.Document.parse(doc.to_json())
    assert again.check().to_structured() == report.to_structured()

    bad = crlie.Document.from_catalog("so3_bad_metric").check()
    assert not bad.passed
    assert bad.failures()[0][:2] == ("kahler.omega_antisymmetric", ["e1", "e2"])

    table = crlie.Document.from_catalog("aff_aff").left_symmetric_product()
    assert len(table) == 4

    try:
        crlie.Document.parse('{"algebra": {"dim": 1, "brackets": [{"x": 1, "y": 1, "result": ["1/0"]}]}}')
    except ValueError as err:
        assert "1/0" in str(err)
    else:
        raise AssertionError("malformed rational accepted")

    try:
        crlie.Document.from_catalog("so4")
    except KeyError:
        pass
    else:
        raise AssertionError("unknown id accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
