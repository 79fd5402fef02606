import numpy as np
import pytest
from casmodes import *


@pytest.mark.parametrize("name", ['sum-rule', 'perfect-mirror', 'lambda-independence', 'short-distance', 'te-cancellation'])
def test_check_passes(name):
	res = run_check(name)
	print(res.report())
	assert res.passed
	assert res.name == name
	assert res.report().endswith('PASS') or 'PASS (' in res.report()


def test_sum_rule_value():
	res = check_sum_rule()
	assert res.measured < 1e-13
	assert res.expected == 0


def test_report_format():
	res = CheckResult.compare('demo', 1.02, 1., 0.05)
	assert res.passed
	assert res.report() == "demo: measured 1.02, expected 1, tolerance 0.05 -> PASS"
	res = CheckResult.compare('demo', np.nan, 1., 0.05, 'diverged')
	assert not res.passed
	assert res.report().endswith("-> FAIL (diverged)")


def test_unknown_check():
	with pytest.raises(KeyError):
		run_check('no-such-check')


def test_numerical_failure_is_fail():
	# a starved quadrature cannot reach its tolerance
	quad = QuadratureConfig(rel_tol = 1e-15, abs_tol = 0., max_subdivisions = 4)
	res = run_check('perfect-mirror', quad)
	print(res.report())
	assert not res.passed
	assert 'numerical failure' in res.detail


if __name__ == '__main__':
	test_check_passes('sum-rule')
