import pytest

import invschub as iv


def test_schubert_frozen():
    assert str(iv.schubert(iv.Permutation([3, 2, 1]))) == "x1^2*x2"
    assert iv.length(iv.Permutation([3, 2, 1])) == 3


def test_involution_atoms_and_polynomial():
    y = iv.parse_involution("(1,4)(2,3)")
    assert iv.hat_length(y) == 4
    assert sorted(repr(w) for w in iv.atoms(y)) == ["2,4,3,1", "3,4,1,2", "4,2,1,3"]
    f = iv.inv_schubert(y)
    assert str(f) == "x1^3*x2 + x1^2*x2^2 + x1^2*x2*x3 + x1*x2^2*x3"
    assert iv.upsilon(y) == 4 * f


def test_fpf_frozen():
    z = iv.parse_fpf("(1,4)(2,3)")
    assert str(iv.fpf_schubert(z)) == "x1^2 + x1*x2 + x1*x3 + x2*x3"
    assert iv.fpf_words(z) == [[2, 1], [2, 3]]


def test_transition_identity_and_cover_sets():
    y = iv.parse_involution("(2,3)(4,7)")
    r = iv.transition_inv(y, 2, 3)
    assert r.lhs == r.rhs
    assert [repr(z) for z in r.minus_set] == ["(1,3)(4,7)"]
    assert [repr(z) for z in r.plus_set] == ["(2,4)(3,7)", "(2,5)(4,7)", "(2,7)"]

    zf = iv.parse_fpf("(1,5)(2,4)(3,6)(7,8)")
    rf = iv.transition_fpf(zf, 3, 6)
    assert rf.lhs == rf.rhs


def test_bump_and_little_map():
    y = iv.parse_involution("(2,5)")
    assert iv.bump(iv.MarkedWord([3, 2, 4, 5], 4), y) == iv.MarkedWord([2, 1, 3, 4], 2)
    assert iv.little_map(iv.parse_involution("15432"), [5, 3, 4, 2, 3]) == [4, 2, 3, 1, 2]
    rep = iv.verify_bijection(iv.parse_involution("(1,2)"), 1, 2)
    assert (rep.plus_covers, rep.minus_covers, rep.words) == (1, 1, 2)


def test_text_round_trips():
    for text, parse in [
        ("4,1,3,2", iv.parse_permutation),
        ("(2,5)(3,4)", iv.parse_involution),
        ("(1,6)(2,3)(4,5)", iv.parse_fpf),
    ]:
        obj = parse(text)
        assert parse(repr(obj)) == obj
    f = iv.inv_schubert(iv.parse_involution("(1,5)(2,4)"))
    assert iv.Polynomial.parse(str(f)) == f


def test_sweeps_and_error_mapping():
    rep = iv.run_suite("worked-examples")
    assert rep.passed()
    assert rep.checked == rep.universe_size == 25
    assert rep.canonical_text().endswith("result: pass\n")

    one = iv.run_suite("little-fpf", workers=1).canonical_text()
    four = iv.run_suite("little-fpf", workers=4).canonical_text()
    assert one == four

    with pytest.raises(ValueError):
        iv.run_suite("no-such-suite")
    with pytest.raises(ValueError):
        iv.run_suite("tau-s9")  # refuses to run without big=True
    with pytest.raises(iv.CheckError):
        iv.schubert(iv.Permutation.transposition(17, 18))  # window cap
