"""JSON encoding of the domain types.

Rationals serialize as strings "p/q", or "p" when the denominator is one.
Decoders carry a breadcrumb path so malformed payloads are reported with
the offending location.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .filtration import FilteredSpace, GradedVectorSpace, make_filtered
from .gl2 import GroupActionData, RepData, rep_from_label
from .homspaces import FiltObject
from .linalg import Mat, Subspace
from .rees import GradedFreeModule
from .varieties import VarietySpec, custom_variety


class InputError(ValueError):
    """Malformed or semantically invalid payload, with its location."""

    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}")
        self.path = path


def rat_to_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rat_from_json(value: Any, path: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError(path, f"expected a rational as integer or 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(path, f"bad rational {value!r}: {exc}") from None


def _expect_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise InputError(path, f"expected a list, got {type(value).__name__}")
    return value


def _expect_object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise InputError(path, f"expected an object, got {type(value).__name__}")
    return value


def _expect_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(path, f"expected an integer, got {value!r}")
    return value


def vector_to_json(v) -> list[str]:
    return [rat_to_str(x) for x in v]


def vector_from_json(value: Any, path: str) -> tuple[Fraction, ...]:
    return tuple(rat_from_json(x, f"{path}[{i}]") for i, x in enumerate(_expect_list(value, path)))


def matrix_to_json(m: Mat) -> list[list[str]]:
    return [vector_to_json(m.row(i)) for i in range(m.rows)]


def matrix_from_json(value: Any, path: str) -> Mat:
    rows = [vector_from_json(r, f"{path}[{i}]") for i, r in enumerate(_expect_list(value, path))]
    if not rows:
        raise InputError(path, "matrix needs at least one row")
    if len({len(r) for r in rows}) != 1:
        raise InputError(path, "matrix rows have unequal lengths")
    return Mat.from_rows(rows)


def filtered_space_to_json(fs: FilteredSpace) -> dict:
    return {
        "dim": fs.dim,
        "steps": [{"index": idx, "basis": [vector_to_json(v) for v in sub.basis]} for idx, sub in fs.steps],
    }


def filtered_space_from_json(value: Any, path: str = "$") -> FilteredSpace:
    obj = _expect_object(value, path)
    dim = _expect_int(obj.get("dim"), f"{path}.dim")
    steps = {}
    for i, step in enumerate(_expect_list(obj.get("steps", []), f"{path}.steps")):
        sp = f"{path}.steps[{i}]"
        step = _expect_object(step, sp)
        idx = _expect_int(step.get("index"), f"{sp}.index")
        basis = [vector_from_json(v, f"{sp}.basis[{j}]") for j, v in enumerate(_expect_list(step.get("basis"), f"{sp}.basis"))]
        try:
            steps[idx] = Subspace.span(dim, basis)
        except ValueError as exc:
            raise InputError(f"{sp}.basis", str(exc)) from None
    try:
        return make_filtered(dim, steps)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def graded_module_to_json(m: GradedFreeModule) -> dict:
    return {
        "ambient_dim": m.ambient_dim,
        "generators": [{"vector": vector_to_json(v), "degree": d} for v, d in m.generators],
    }


def graded_module_from_json(value: Any, path: str = "$") -> GradedFreeModule:
    obj = _expect_object(value, path)
    ambient = _expect_int(obj.get("ambient_dim"), f"{path}.ambient_dim")
    gens = []
    for i, gen in enumerate(_expect_list(obj.get("generators", []), f"{path}.generators")):
        gp = f"{path}.generators[{i}]"
        gen = _expect_object(gen, gp)
        v = vector_from_json(gen.get("vector"), f"{gp}.vector")
        if len(v) != ambient:
            raise InputError(f"{gp}.vector", f"length {len(v)} does not match ambient_dim {ambient}")
        gens.append((v, _expect_int(gen.get("degree"), f"{gp}.degree")))
    return GradedFreeModule(ambient, tuple(gens))


def graded_space_to_json(g: GradedVectorSpace) -> dict:
    return {str(n): d for n, d in g.pieces}


def rep_to_json(rep: RepData) -> dict:
    if rep.label is not None and rep.label != "trivial":
        label = rep.label
        if isinstance(label[0], tuple):
            return {"group": "GL2xGL2", "label": [list(label[0]), list(label[1])]}
        return {"group": "GL2", "label": list(label)}
    return {
        "dim": rep.dim,
        "weights": [list(w) for w in rep.weights],
        "ops": [matrix_to_json(op) for op in rep.action_ops],
    }


def rep_from_json(value: Any, path: str = "$") -> RepData:
    obj = _expect_object(value, path)
    if "group" in obj:
        group = obj["group"]
        label = obj.get("label")
        lp = f"{path}.label"
        try:
            if group == "GL2":
                pair = _expect_list(label, lp)
                return rep_from_label("GL2", (_expect_int(pair[0], lp), _expect_int(pair[1], lp)))
            if group == "GL2xGL2":
                pair = _expect_list(label, lp)
                a = _expect_list(pair[0], f"{lp}[0]")
                b = _expect_list(pair[1], f"{lp}[1]")
                return rep_from_label(
                    "GL2xGL2",
                    ((_expect_int(a[0], lp), _expect_int(a[1], lp)), (_expect_int(b[0], lp), _expect_int(b[1], lp))),
                )
        except (IndexError, ValueError) as exc:
            raise InputError(lp, str(exc)) from None
        raise InputError(f"{path}.group", f"unknown group {group!r}")
    dim = _expect_int(obj.get("dim"), f"{path}.dim")
    weights = tuple(
        tuple(_expect_int(c, f"{path}.weights[{i}]") for c in _expect_list(w, f"{path}.weights[{i}]"))
        for i, w in enumerate(_expect_list(obj.get("weights"), f"{path}.weights"))
    )
    ops = tuple(matrix_from_json(op, f"{path}.ops[{i}]") for i, op in enumerate(_expect_list(obj.get("ops", []), f"{path}.ops")))
    try:
        return RepData(dim, weights, ops)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def group_action_from_json(value: Any, path: str = "$") -> GroupActionData:
    obj = _expect_object(value, path)
    dim = _expect_int(obj.get("dim"), f"{path}.dim")
    mats = tuple(
        matrix_from_json(m, f"{path}.intertwiner_constraints[{i}]")
        for i, m in enumerate(_expect_list(obj.get("intertwiner_constraints", []), f"{path}.intertwiner_constraints"))
    )
    try:
        return GroupActionData(dim, mats)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def filt_object_from_json(value: Any, path: str = "$") -> FiltObject:
    obj = _expect_object(value, path)
    rep = rep_from_json(obj.get("rep"), f"{path}.rep")
    action = group_action_from_json(obj.get("h_action"), f"{path}.h_action")
    filts = tuple(
        filtered_space_from_json(f, f"{path}.filtrations[{i}]")
        for i, f in enumerate(_expect_list(obj.get("filtrations", []), f"{path}.filtrations"))
    )
    try:
        return FiltObject(rep, action, filts)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def custom_variety_from_json(value: Any, path: str = "$") -> VarietySpec:
    obj = _expect_object(value, path)
    rank_ = _expect_int(obj.get("group_rank"), f"{path}.group_rank")
    cochars = [
        [_expect_int(c, f"{path}.cocharacters[{i}]") for c in _expect_list(mu, f"{path}.cocharacters[{i}]")]
        for i, mu in enumerate(_expect_list(obj.get("cocharacters", []), f"{path}.cocharacters"))
    ]
    weights = [
        [_expect_int(c, f"{path}.x_module_weights[{i}]") for c in _expect_list(w, f"{path}.x_module_weights[{i}]")]
        for i, w in enumerate(_expect_list(obj.get("x_module_weights", []), f"{path}.x_module_weights"))
    ]
    ops_table = {}
    for key, mats in _expect_object(obj.get("stabilizer_ops", {}), f"{path}.stabilizer_ops").items():
        ops_table[key] = [
            matrix_from_json(m, f"{path}.stabilizer_ops[{key!r}][{i}]")
            for i, m in enumerate(_expect_list(mats, f"{path}.stabilizer_ops[{key!r}]"))
        ]
    group = obj.get("group", "generic")
    if group not in ("generic", "GL2", "GL2xGL2"):
        raise InputError(f"{path}.group", f"unknown group {group!r}")
    try:
        return custom_variety(rank_, cochars, weights, ops_table, group=group)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def dumps(payload: object) -> str:
    """Deterministic compact rendering used by all CLI output."""
    return json.dumps(payload, separators=(", ", ": "), sort_keys=False)
