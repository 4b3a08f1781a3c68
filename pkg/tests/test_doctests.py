import doctest

import tornheim
from tornheim import approx, laurent


def test_module_doctests():
    for mod in (tornheim, approx, laurent):
        failed, _ = doctest.testmod(mod)
        assert failed == 0, mod.__name__


def test_readme_examples():
    from pathlib import Path
    readme = Path(__file__).resolve().parents[1] / "README.md"
    failed, tried = doctest.testfile(str(readme), module_relative=False)
    assert tried > 0 and failed == 0
