"""Size limits that keep the oracle from being asked for infeasible work.

Defaults can be overridden by a JSON file named in ``TWISTCALC_CONFIG`` and
then by ``TWISTCALC_BUDGET="key=value,key=value"``.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace

from .errors import BudgetError


@dataclass(frozen=True)
class Budget:
    max_tensor_dim: int = 1024  # n**D
    max_algebra_dim: int = 220  # structure constants are cubic in this
    max_module_dim: int = 4000  # any single projective term of a resolution
    max_resolution_length: int = 12

    def require(self, key: str, value: int, what: str) -> None:
        limit = getattr(self, key)
        if value > limit:
            raise BudgetError(f"{what} = {value} exceeds {key} = {limit}")

    def to_json(self) -> dict:
        return asdict(self)


def _coerce(overrides: dict) -> dict:
    names = {f.name for f in fields(Budget)}
    out = {}
    for key, val in overrides.items():
        if key not in names:
            raise ValueError(f"unknown budget key {key!r}; known: {sorted(names)}")
        out[key] = int(val)
    return out


def load_budget(config_path: str | None = None, env: dict | None = None) -> Budget:
    env = os.environ if env is None else env
    budget = Budget()
    path = config_path or env.get("TWISTCALC_CONFIG")
    if path:
        with open(path) as fh:
            budget = replace(budget, **_coerce(json.load(fh).get("budget", {})))
    pairs_text = env.get("TWISTCALC_BUDGET", "").strip()
    if pairs_text:
        pairs = dict(item.split("=", 1) for item in pairs_text.split(",") if item.strip())
        budget = replace(budget, **_coerce({k.strip(): v.strip() for k, v in pairs.items()}))
    return budget
