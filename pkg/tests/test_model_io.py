"""LP text export/import: format shape, exactness, round trips, error reporting."""

from fractions import Fraction

import pytest

from doubleroman.corpus import cycle_graph, path_graph
from doubleroman.formulations import FormulationKind, build_formulation
from doubleroman.model import (
    BINARY,
    CONTINUOUS,
    GE,
    LE,
    IlpModel,
    LinearConstraint,
    LpParseError,
    Variable,
    export_lp,
    import_lp,
)


def _tiny_model():
    y = Variable(0, "y_0", Fraction(0), Fraction(1), BINARY)
    z = Variable(1, "z_0", Fraction(0), Fraction(1), BINARY)
    con = LinearConstraint("cover_0", ((0, Fraction(1)), (1, Fraction(1))), GE, Fraction(1))
    return IlpModel((y, z), (con,), ((0, Fraction(2)), (1, Fraction(3))))


def test_export_section_order():
    text = export_lp(_tiny_model())
    lines = text.splitlines()
    assert lines[0] == "Minimize"
    order = [lines.index(k) for k in ("Minimize", "Subject To", "Binary", "End")]
    assert order == sorted(order)
    assert " obj: 2 y_0 + 3 z_0" in text
    assert " cover_0: y_0 + z_0 >= 1" in text
    assert "Bounds" not in text  # all binary


def test_export_drdp1_k2_counts(k2):
    model = build_formulation(k2, FormulationKind.DRDP1)
    text = export_lp(model)
    binary_block = text.split("Binary\n", 1)[1].split("End", 1)[0]
    assert len(binary_block.split()) == 6
    subject = text.split("Subject To\n", 1)[1].split("Binary", 1)[0]
    assert len([ln for ln in subject.splitlines() if ln.strip()]) == 6


def test_export_drdp2pp_bounds_section(k2):
    model = build_formulation(k2, FormulationKind.DRDP2PP)
    text = export_lp(model)
    assert "Bounds" in text
    assert " 0 <= r_0 <= 1" in text
    binary_block = text.split("Binary\n", 1)[1].split("End", 1)[0]
    assert "r_0" not in binary_block and "r_1" not in binary_block


def test_half_coefficients_written_exactly(p3):
    text = export_lp(build_formulation(p3, FormulationKind.DRDP1PP))
    assert "0.5 y_0" in text or "0.5 y_1" in text
    assert "/" not in text.replace("0.5", "")


def test_round_trip_identity_c4():
    model = build_formulation(cycle_graph(4), FormulationKind.DRDP1P)
    again = import_lp(export_lp(model))
    assert again.structure_equal(model)


@pytest.mark.parametrize("kind", list(FormulationKind))
def test_round_trip_identity_all_kinds(kind):
    model = build_formulation(path_graph(5), kind)
    again = import_lp(export_lp(model))
    assert again.structure_equal(model)
    assert export_lp(again) == export_lp(model)


def test_export_deterministic(p4):
    model = build_formulation(p4, FormulationKind.DRDP2P)
    assert export_lp(model) == export_lp(model)


def test_import_missing_end():
    text = "Minimize\n obj: y_0\nSubject To\n c0: y_0 >= 1\n"
    with pytest.raises(LpParseError):
        import_lp(text)


def test_import_error_carries_line_number():
    text = "Minimize\n obj: y_0\nSubject To\n c0: y_0 >= one\nEnd\n"
    with pytest.raises(LpParseError) as err:
        import_lp(text)
    assert err.value.line == 4


def test_import_duplicate_constraint_name():
    text = "Minimize\n obj: y_0\nSubject To\n c0: y_0 >= 1\n c0: y_0 <= 1\nEnd\n"
    with pytest.raises(LpParseError, match="duplicate"):
        import_lp(text)


def test_import_unknown_variable_in_binary_section():
    text = "Minimize\n obj: y_0\nSubject To\n c0: y_0 >= 1\nBinary\n ghost\nEnd\n"
    with pytest.raises(LpParseError, match="unknown"):
        import_lp(text)


def test_import_infers_undeclared_variable_as_free():
    text = (
        "Minimize\n"
        " obj: 2 y_0 + s\n"
        "Subject To\n"
        " c0: y_0 + 0.5 s >= 1\n"
        "Binary\n"
        " y_0\n"
        "End\n"
    )
    model = import_lp(text)
    s = model.variable_by_name("s")
    assert s.integrality == CONTINUOUS
    assert s.lower is None and s.upper is None
    assert model.variable_by_name("y_0").integrality == BINARY
    assert model.constraints[0].terms[1] == (s.id, Fraction(1, 2))


def test_import_variable_in_both_sections_flagged():
    text = (
        "Minimize\n obj: y_0\nSubject To\n c0: y_0 >= 1\n"
        "Bounds\n 0 <= y_0 <= 1\nBinary\n y_0\nEnd\n"
    )
    with pytest.raises(LpParseError, match="both"):
        import_lp(text)


def test_import_negative_rhs_and_coefficients():
    text = (
        "Minimize\n obj: y_0 - 2 y_1\nSubject To\n c0: - y_0 + 0.5 y_1 <= -1\n"
        "Binary\n y_0\n y_1\nEnd\n"
    )
    model = import_lp(text)
    con = model.constraints[0]
    assert con.rhs == Fraction(-1)
    assert con.terms[0][1] == Fraction(-1)
    assert con.terms[1][1] == Fraction(1, 2)
    assert dict(model.objective)[model.variable_by_name("y_1").id] == Fraction(-2)


def test_import_rejects_junk_tokens():
    text = "Minimize\n obj: y_0 @ y_1\nSubject To\n c0: y_0 >= 1\nEnd\n"
    with pytest.raises(LpParseError):
        import_lp(text)


def test_model_validation():
    y = Variable(0, "y", Fraction(0), Fraction(1), BINARY)
    with pytest.raises(ValueError):
        Variable(1, "bad name", Fraction(0), Fraction(1), BINARY)
    with pytest.raises(ValueError):
        Variable(1, "z", Fraction(0), Fraction(2), BINARY)
    with pytest.raises(ValueError):
        LinearConstraint("c", ((0, Fraction(0)),), GE, Fraction(1))
    with pytest.raises(ValueError):
        LinearConstraint("c", ((0, Fraction(1)), (0, Fraction(1))), LE, Fraction(1))
    with pytest.raises(ValueError):
        IlpModel((y,), (), ((5, Fraction(1)),))
