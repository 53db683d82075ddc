"""One test per acceptance criterion; each prints a single pass/fail line,
and the lines are repeated in the terminal summary."""
import pytest

from nilhom.verify import CRITERIA

from conftest import VERDICT_LINES


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    verdict = CRITERIA[number]()
    line = verdict.line()
    VERDICT_LINES.append(line)
    print(line)
    assert verdict.passed, "\n".join([line, *verdict.details])
