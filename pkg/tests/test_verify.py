import pytest

from biquat import verify_suite


class TestVerifySuite:
    def test_all_laws_pass(self):
        report = verify_suite(seed=7, trials=5, size=3)
        failing = [law.name for law in report.laws if not law.passed]
        assert failing == []
        assert report.all_passed

    def test_deterministic_render(self):
        a = verify_suite(seed=11, trials=3, size=2).render()
        b = verify_suite(seed=11, trials=3, size=2).render()
        assert a == b

    def test_seed_changes_samples_not_structure(self):
        a = verify_suite(seed=1, trials=2, size=2)
        b = verify_suite(seed=2, trials=2, size=2)
        assert [l.name for l in a.laws] == [l.name for l in b.laws]

    def test_exact_laws_have_zero_residual(self):
        report = verify_suite(seed=3, trials=4, size=3)
        for law in report.laws:
            if law.tolerance == 0.0:
                assert law.max_residual == 0.0, law.name

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            verify_suite(trials=0)
        with pytest.raises(ValueError):
            verify_suite(size=0)

    def test_report_mentions_measured_exponent(self):
        report = verify_suite(seed=5, trials=2, size=2)
        law = next(l for l in report.laws if l.name == "det.scaling-exponent")
        assert law.note == "measured exponent n"
