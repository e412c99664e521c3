"""Blow-up catalog: one record per classified weighted blow-up shape.

Each row stores the ambient space, the equation template, the blow-up weight
and a formula in ``dep`` bounding the weight of the exceptional divisor.
"""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Optional

from .errors import PreconditionError

CATALOG_VERSION = 1

_ALLOWED_CALLS = {"max": max, "min": min}


def eval_formula(expr: str, dep: int) -> int:
    """Evaluate an integer formula in ``dep`` (``+ - *``, integer literals, max/min)."""
    tree = ast.parse(expr, mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id == "dep":
            return dep
        if isinstance(node, ast.BinOp) and isinstance(node.op, (ast.Add, ast.Sub, ast.Mult)):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            return a * b
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
                and node.func.id in _ALLOWED_CALLS and not node.keywords):
            return _ALLOWED_CALLS[node.func.id](*(ev(a) for a in node.args))
        raise PreconditionError(f"unsupported construct in bound formula {expr!r}")

    return int(ev(tree))


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    group: str
    family: str
    ambient: int
    codim: int
    quotient: str
    equation: str
    weight: str
    bound: Optional[str]
    min_dep: int = 0
    relation: str = ""
    delegate: Optional[str] = None
    sample: Optional[dict] = field(default=None, compare=False)

    @property
    def singularity_type(self) -> str:
        return self.family


@lru_cache(maxsize=1)
def load_catalog() -> tuple:
    raw = resources.files("chitop").joinpath("data/catalog.json").read_text()
    doc = json.loads(raw)
    if doc.get("version") != CATALOG_VERSION:
        raise PreconditionError(f"catalog version {doc.get('version')} is not {CATALOG_VERSION}")
    return tuple(CatalogEntry(**row) for row in doc["rows"])


def catalog_entry(key: str) -> CatalogEntry:
    """Look up a row by id, or by family when the family has a single row."""
    rows = load_catalog()
    for row in rows:
        if row.id == key:
            return row
    family = [row for row in rows if row.family == key]
    if not family:
        raise PreconditionError(f"no catalog row {key!r}")
    return family[0]


def catalog_rows(group: Optional[str] = None) -> list:
    return [row for row in load_catalog() if group is None or row.group == group]


def catalog_weight_bound(entry, dep: int) -> int:
    """The row's printed bound on the weight of the exceptional divisor at depth ``dep``."""
    if isinstance(entry, str):
        entry = catalog_entry(entry)
    if dep < 0:
        raise PreconditionError("depth must be nonnegative")
    if entry.bound is None:
        raise PreconditionError(f"row {entry.id!r} delegates to the {entry.delegate} rows and has no weight bound")
    return eval_formula(entry.bound, dep)
