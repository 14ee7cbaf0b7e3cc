"""Acceptance gate: every golden criterion at exact-equality tolerance.

Each test prints its own pass/fail line so a plain `pytest -s
tests/test_acceptance.py` doubles as the verification table; the same
criteria back the `spochar reproduce-paper` command.
"""

from spochar import acceptance


def _run(number):
    result = acceptance._CRITERIA[number]()
    status = "PASS" if result.passed else "FAIL"
    print(f"[{status}] criterion {result.number}: {result.title}")
    for line in result.details:
        print(f"    {line}")
    assert result.passed, "\n".join(result.details)


def test_criterion_01_euler_goldens():
    _run(1)


def test_criterion_02_euler_equals_jacobi_trudi():
    _run(2)


def test_criterion_03_shift_recursion_and_doubling():
    _run(3)


def test_criterion_04_determinant_forms_agree():
    _run(4)


def test_criterion_05_identity_suite():
    _run(5)


def test_criterion_06_virtual_dimensions():
    _run(6)


def test_criterion_07_euler_decomposition_families():
    _run(7)


def test_criterion_08_tensor_tables():
    _run(8)


def test_criterion_09_laplacian_kernels():
    _run(9)


def test_criterion_10_property_suites():
    _run(10)


def test_criterion_11_basis_desk_check():
    _run(11)
