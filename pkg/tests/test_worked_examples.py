import pytest

from engine.scripts import worked_examples


def test_usage_runs_the_module_form():
    doc = worked_examples.__doc__
    assert "python -m engine.scripts.worked_examples" in doc
    assert "engine/scripts/worked_examples.py" not in doc


@pytest.mark.parametrize("group", sorted(worked_examples.GROUPS))
def test_each_group_reproduces_its_values(group):
    assert worked_examples.main(["--only", group]) == 0
