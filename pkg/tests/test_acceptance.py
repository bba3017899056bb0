"""Acceptance suite: ten exact criteria, one test (and one printed pass/fail
line) per criterion.  Every comparison is exact; there are no tolerances."""

from tiedbox import checks


def _assert_all(criterion, records):
    bad = [r for r in records if r["status"] != "pass"]
    verdict = "PASS" if not bad else "FAIL"
    print(f"ACCEPTANCE {criterion}: {verdict} "
          f"({len(records) - len(bad)}/{len(records)} records)")
    assert not bad, bad


def test_criterion_01_monoid_cardinalities():
    _assert_all("1 monoid cardinalities", checks.check_cardinalities())


def test_criterion_02_dimension_formulas():
    _assert_all("2 dimension formulas", checks.check_dimensions())


def test_criterion_03_presentations():
    _assert_all("3 presentation checks", checks.check_presentations())


def test_criterion_04_representation_oracle():
    _assert_all("4 representation oracle", checks.check_representation(seed=0))


def test_criterion_05_structure_constants():
    _assert_all("5 structure constants", checks.check_structure_constants())


def test_criterion_06_idempotent_suite():
    _assert_all("6 idempotent suite", checks.check_idempotents())


def test_criterion_07_cellular_suites():
    _assert_all("7 cellular suites", checks.check_cellular())


def test_criterion_08_quotients_and_embeddings():
    _assert_all("8 quotients and embeddings", checks.check_quotients())


def test_criterion_09_normal_forms():
    _assert_all("9 normal forms", checks.check_normal_forms())


def test_criterion_10_centers():
    _assert_all("10 centers", checks.check_centers())
