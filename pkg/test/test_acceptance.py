#
#   Test the acceptance suite
#
import pytest
import flagsphere as fs

FAST = [1, 2, 4, 5, 8, 10]
SLOW = [3, 6, 7, 9, 11]


@pytest.mark.parametrize('number', FAST)
def test_criterion(number):
    result = fs.run_criterion(number)
    assert result.passed, result.details
    assert result.error is None


@pytest.mark.slow
@pytest.mark.parametrize('number', SLOW)
def test_slow_criterion(number):
    result = fs.run_criterion(number)
    assert result.passed, result.details


def test_criteria_are_numbered():
    assert sorted(fs.CRITERIA) == sorted(FAST + SLOW)


def test_unknown_criterion():
    with pytest.raises(fs.InputError):
        fs.run_criterion(12)
    with pytest.raises(fs.InputError):
        fs.run_acceptance([1, 99])


def test_run_acceptance_order():
    results = fs.run_acceptance([8, 1, 8])
    assert [r.number for r in results] == [1, 8]
    assert 'seconds' not in results[0].to_dict()
    assert results[0].to_dict(timing=True)['seconds'] >= 0


def test_failures_are_reported(monkeypatch):
    def broken():
        raise fs.DomainError('not a sphere')

    monkeypatch.setitem(fs.CRITERIA, 1, ('broken', broken))
    result = fs.run_criterion(1)
    assert not result.passed
    assert result.error == 'DomainError: not a sphere'


def test_package_exports():
    assert callable(fs.is_cohen_macaulay)
    assert callable(fs.run_acceptance)
    assert 3 in fs.CRITERIA


@pytest.mark.parametrize('coeff', [2, 3, 'Q'])
def test_gm_sphere_over_fields(coeff):
    d = fs.independence_complex(fs.build_gm(3))
    assert fs.is_homology_sphere(d, coeff)
    assert fs.is_cohen_macaulay(d, coeff)


@pytest.mark.slow
def test_sphere_status_fields():
    result = fs.run_criterion(3)
    assert result.passed
    for row in result.details.values():
        assert row['sphere_F2'] and row['sphere_F3'] and row['sphere_Q']
