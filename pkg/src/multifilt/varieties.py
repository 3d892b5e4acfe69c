"""Boundary cocharacter data and the filtrations it induces.

A cocharacter mu pairs integrally with torus weights; on a representation
it induces the decreasing filtration

    F(i) = span of the weight spaces with -<mu, weight> >= i.

Boundary cocharacters are inputs here, never derived: the two built-in
examples carry them explicitly, together with the weights of the ambient
module (used by the character oracle) and a stabilizer recipe (used by the
Hom solver).

Conventions pinned by the built-ins (printed by the CLI as well):

* The coordinate ring of a module U in degree d is the d-th symmetric
  power of the dual module, i.e. of U with all weights negated.
* Binary quadratic forms: the ambient module carries weights (-2, 0),
  (-1, -1), (0, -2), so its dual is the (2, 0) irreducible.  Boundary
  cocharacter (1, 0).  The stabilizer of the base form is the full
  orthogonal stabilizer: the torus t -> [[t, 1/t - t], [0, 1/t]] together
  with a determinant -1 reflection (see gl2.stabilizer_action_binary_forms).
* 2x2 matrices: the module is taken in the contragradient model, weights
  (-1, 0, -1, 0), (-1, 0, 0, -1), (0, -1, -1, 0), (0, -1, 0, -1), whose
  dual is the external product of the two standard representations.  The
  stabilizer of the identity matrix is then the twisted diagonal
  {(g, transpose-inverse of g)}, a connected copy of GL2, realized on a
  product representation by pairing each factor operator with minus the
  transposed operator of the other factor.  Boundary cocharacter
  (1, 1, 0, -1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .filtration import FilteredSpace, make_filtered
from .gl2 import (
    GroupActionData,
    H_STYLE_LIE_PLUS_ELEMENTS,
    RepData,
    Weight,
    external_rep,
    irrep_gl2,
    stabilizer_action_binary_forms,
)
from .linalg import Mat, Subspace

Cocharacter = tuple[int, ...]

BINARY_QUADRATIC_FORMS = "BinaryQuadraticForms"
TWO_BY_TWO_MATRICES = "TwoByTwoMatrices"
CUSTOM = "Custom"

StabilizerRecipe = Callable[[RepData, str], GroupActionData]


def pairing(mu: Cocharacter, chi: Weight) -> int:
    """Integral pairing of a cocharacter with a weight (dot product)."""
    if len(mu) != len(chi):
        raise ValueError(f"cocharacter length {len(mu)} does not match weight length {len(chi)}")
    return sum(a * b for a, b in zip(mu, chi))


def cocharacter_filtration(rep: RepData, mu: Cocharacter) -> FilteredSpace:
    """The filtration F(i) = sum of weight spaces with -<mu, weight> >= i."""
    values = [-pairing(mu, chi) for chi in rep.weights]
    steps = {}
    for v in sorted(set(values)):
        rows = [_unit(rep.dim, b) for b in range(rep.dim) if values[b] >= v]
        steps[v] = Subspace.span(rep.dim, rows)
    return make_filtered(rep.dim, steps)


def _unit(dim: int, b: int) -> list[int]:
    row = [0] * dim
    row[b] = 1
    return row


@dataclass(frozen=True)
class VarietySpec:
    """An affine fixed-pointed spherical example, given by its data.

    ``x_module_weights`` are the torus weights of the ambient module itself;
    the character oracle negates them to form the coordinate ring.  The
    ``stabilizer`` recipe produces equivariance constraints for any
    representation over the group; ``boundary_cocharacters`` may be empty,
    in which case objects degenerate to plain representations.
    """

    name: str
    group: str
    rank: int
    boundary_cocharacters: tuple[Cocharacter, ...]
    x_module_weights: tuple[Weight, ...]
    stabilizer: StabilizerRecipe = field(compare=False)

    def __post_init__(self) -> None:
        for mu in self.boundary_cocharacters:
            if len(mu) != self.rank:
                raise ValueError("cocharacter length does not match the torus rank")
        for w in self.x_module_weights:
            if len(w) != self.rank:
                raise ValueError("module weight length does not match the torus rank")

    def stabilizer_action(self, rep: RepData, style: str = H_STYLE_LIE_PLUS_ELEMENTS) -> GroupActionData:
        return self.stabilizer(rep, style)

    def trivial_rep(self) -> RepData:
        if self.group == "GL2":
            return irrep_gl2(0, 0)
        if self.group == "GL2xGL2":
            return external_rep((0, 0), (0, 0))
        return RepData(1, ((0,) * self.rank,), (), label="trivial")


def _binary_forms_stabilizer(rep: RepData, style: str) -> GroupActionData:
    label = rep.label
    if not (isinstance(label, tuple) and len(label) == 2 and all(isinstance(c, int) for c in label)):
        raise ValueError("binary-forms stabilizer needs a labeled GL2 irreducible")
    return stabilizer_action_binary_forms(label[0], label[1], style)


def _matrix_variety_stabilizer(rep: RepData, style: str) -> GroupActionData:
    # Twisted diagonal {(g, g^-T)}: Lie element X acts as X on the left
    # factor and -X^T on the right, so E12 pairs with -E21 and so on.  The
    # group is connected, so both styles produce the same constraints.
    del style
    ops = rep.action_ops
    if len(ops) != 8:
        raise ValueError("matrix-variety stabilizer needs paired factor operators")
    e1, f1, h11, h12, e2, f2, h21, h22 = ops
    constraints = (e1 - f2, f1 - e2, h11 - h21, h12 - h22)
    return GroupActionData(rep.dim, constraints)


def custom_variety(
    rank: int,
    cocharacters: Sequence[Sequence[int]],
    x_module_weights: Sequence[Sequence[int]],
    stabilizer_ops: Mapping[str, Sequence[Mat]] | None = None,
    group: str = "generic",
) -> VarietySpec:
    """A user-supplied example; stabilizer constraints are looked up per
    representation label (see label_key), with labels absent from the table
    rejected.  An empty table means no equivariance constraints."""
    table = {k: tuple(v) for k, v in (stabilizer_ops or {}).items()}

    def recipe(rep: RepData, style: str) -> GroupActionData:
        del style
        if not table:
            return GroupActionData(rep.dim, ())
        key = label_key(rep.label)
        if key not in table:
            raise ValueError(f"no stabilizer constraints given for label {key!r}")
        return GroupActionData(rep.dim, table[key])

    return VarietySpec(
        name=CUSTOM,
        group=group,
        rank=rank,
        boundary_cocharacters=tuple(tuple(int(c) for c in mu) for mu in cocharacters),
        x_module_weights=tuple(tuple(int(c) for c in w) for w in x_module_weights),
        stabilizer=recipe,
    )


def label_key(label: object) -> str:
    """Canonical string key of a representation label, e.g. "2,0" or "1,0;2,1"."""
    if isinstance(label, str):
        return label
    if isinstance(label, tuple) and len(label) == 2 and all(isinstance(c, int) for c in label):
        return f"{label[0]},{label[1]}"
    if isinstance(label, tuple) and len(label) == 2:
        return ";".join(label_key(part) for part in label)
    raise ValueError(f"cannot key label {label!r}")


def builtin_variety(name: str) -> VarietySpec:
    """The two worked examples, fully populated."""
    if name == BINARY_QUADRATIC_FORMS:
        return VarietySpec(
            name=name,
            group="GL2",
            rank=2,
            boundary_cocharacters=((1, 0),),
            x_module_weights=((-2, 0), (-1, -1), (0, -2)),
            stabilizer=_binary_forms_stabilizer,
        )
    if name == TWO_BY_TWO_MATRICES:
        return VarietySpec(
            name=name,
            group="GL2xGL2",
            rank=4,
            boundary_cocharacters=((1, 1, 0, -1),),
            x_module_weights=((-1, 0, -1, 0), (-1, 0, 0, -1), (0, -1, -1, 0), (0, -1, 0, -1)),
            stabilizer=_matrix_variety_stabilizer,
        )
    raise ValueError(f"unknown variety {name!r}")
