import json

import pytest

from twistcalc import errors
from twistcalc.budget import Budget, load_budget


def test_codes_are_distinct():
    classes = [
        errors.MissingEntryError,
        errors.NegativeCoefficientError,
        errors.DegreeExceededError,
        errors.MismatchError,
        errors.DimensionMismatchError,
        errors.BudgetError,
        errors.CrosscheckError,
    ]
    codes = [c.code for c in classes]
    assert codes == [10, 11, 12, 13, 20, 21, 30]
    assert all(issubclass(c, errors.TwistcalcError) for c in classes)
    assert errors.TwistcalcError.code == 1
    assert errors.BudgetError("x").name == "BUDGET"


def test_defaults():
    b = load_budget(env={})
    assert b == Budget()
    assert b.max_algebra_dim == 220


def test_require():
    b = Budget(max_module_dim=3)
    b.require("max_module_dim", 3, "ok")
    with pytest.raises(errors.BudgetError, match="exceeds max_module_dim"):
        b.require("max_module_dim", 4, "module")


def test_overrides(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"budget": {"max_algebra_dim": 500, "max_module_dim": 10}}))
    b = load_budget(env={"TWISTCALC_CONFIG": str(cfg), "TWISTCALC_BUDGET": "max_module_dim=20"})
    assert (b.max_algebra_dim, b.max_module_dim) == (500, 20)
    assert load_budget(str(cfg), env={}).max_module_dim == 10


def test_unknown_key():
    with pytest.raises(ValueError):
        load_budget(env={"TWISTCALC_BUDGET": "max_widgets=3"})
