"""Python smoke tests against the compiled core."""

import qsf


def all_pass(checks):
    return all(c["status"] == "pass" for c in checks)


def test_cyclotomic_arithmetic():
    i = qsf.Cyc.i()
    assert i * i == qsf.Cyc(-1)
    z = qsf.Cyc.zeta(1)
    assert z * z * z * z == qsf.Cyc(-1)
    assert qsf.Cyc.sqrt2() * qsf.Cyc.sqrt2() == qsf.Cyc(2)
    assert (qsf.Cyc(1) / z) * z == qsf.Cyc(1)


def test_dimensions():
    assert [qsf.dimension(n) for n in (1, 2, 3)] == [16, 64, 256]
    assert [qsf.center_dimension(n) for n in (1, 2)] == [5, 11]


def test_verify_suite():
    checks = qsf.verify(1, 1)
    assert checks and all_pass(checks)
    names = {c["name"] for c in checks}
    assert "pentagon" in names and "hexagons" in names


def test_center_and_modules():
    assert all_pass(qsf.center_checks(1, 1))
    assert all_pass(qsf.module_checks(1, 1))


def test_sl2z():
    checks = qsf.sl2z_checks(1, 1)
    assert all_pass(checks)
    S = qsf.s_matrix(1, 1)
    assert len(S) == 5
    # first column of the projective block: (0, 1, -1)
    assert S[0][0] == "0" and S[1][0] == "1" and S[2][0] == "-1"


def test_double_and_compare():
    assert all_pass(qsf.double_checks(1, 1))
    assert all_pass(qsf.compare_checks(1))
