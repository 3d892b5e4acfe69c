"""Hom spaces of multi-filtered representations and multiplicities.

An object couples a representation with equivariance constraints and a
family of filtrations.  The morphisms from one object to another are the
linear maps intertwining every paired constraint and mapping each
filtration step into the corresponding step of the target; their dimension
is the kernel dimension of one assembled rational linear system.

The multiplicity of a representation in the coordinate ring of one of the
built-in examples is the Hom dimension from the object carrying its
cocharacter filtrations and stabilizer constraints to the analogous object
of the trivial representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .filtration import FilteredSpace
from .gl2 import GroupActionData, H_STYLE_LIE_PLUS_ELEMENTS, RepData, rep_from_label
from .linalg import Mat, kernel, rank
from .varieties import VarietySpec, cocharacter_filtration


@dataclass(frozen=True)
class FiltObject:
    """A representation with equivariance constraints and filtrations."""

    rep: RepData
    h_action: GroupActionData
    filtrations: tuple[FilteredSpace, ...]

    def __post_init__(self) -> None:
        if self.h_action.dim != self.rep.dim:
            raise ValueError("constraint dimension does not match the representation")
        for f in self.filtrations:
            if f.dim != self.rep.dim:
                raise ValueError("filtration dimension does not match the representation")


def _check_shapes(a: FiltObject, b: FiltObject) -> None:
    if len(a.filtrations) != len(b.filtrations):
        raise ValueError("objects carry different numbers of filtrations")
    if len(a.h_action.intertwiner_constraints) != len(b.h_action.intertwiner_constraints):
        raise ValueError("objects carry different numbers of equivariance constraints")


def _hom_system(a: FiltObject, b: FiltObject) -> Mat:
    """Linear system on vec(f), f a (dim_b x dim_a) matrix stored row-major."""
    da, db = a.rep.dim, b.rep.dim
    nvars = da * db
    rows: list[list[Fraction]] = []

    def var(r: int, c: int) -> int:
        return r * da + c

    for ka, kb in zip(a.h_action.intertwiner_constraints, b.h_action.intertwiner_constraints):
        # f ka = kb f, one equation per output entry (i, j)
        for i in range(db):
            for j in range(da):
                row = [Fraction(0)] * nvars
                for c in range(da):
                    row[var(i, c)] += ka.at(c, j)
                for r in range(db):
                    row[var(r, j)] -= kb.at(i, r)
                rows.append(row)

    for fa, fb in zip(a.filtrations, b.filtrations):
        for p in fa.jumps():
            ann = fb.at(p).annihilator_matrix()
            if ann.rows == 0:
                continue
            for v in fa.at(p).basis:
                # annihilator rows of the target step kill f v
                for u in range(ann.rows):
                    row = [Fraction(0)] * nvars
                    for r in range(db):
                        urow = ann.at(u, r)
                        if urow == 0:
                            continue
                        for c in range(da):
                            if v[c] != 0:
                                row[var(r, c)] += urow * v[c]
                    rows.append(row)

    return Mat.from_rows(rows, nvars)


def hom_dim(a: FiltObject, b: FiltObject) -> int:
    """Dimension of the space of constraint-intertwining filtered maps a -> b.

    Zero-dimensional objects follow the empty-map convention: 1 against
    themselves, 0 against anything nonzero.
    """
    _check_shapes(a, b)
    if a.rep.dim == 0 and b.rep.dim == 0:
        return 1
    if a.rep.dim == 0 or b.rep.dim == 0:
        return 0
    return a.rep.dim * b.rep.dim - rank(_hom_system(a, b))


def hom_basis(a: FiltObject, b: FiltObject) -> list[Mat]:
    """Matrices spanning the Hom space (empty for zero-dimensional objects)."""
    _check_shapes(a, b)
    if a.rep.dim == 0 or b.rep.dim == 0:
        return []
    da, db = a.rep.dim, b.rep.dim
    sol = kernel(_hom_system(a, b))
    return [Mat(db, da, tuple(v)) for v in sol.basis]


def filt_object(rep: RepData, spec: VarietySpec, style: str = H_STYLE_LIE_PLUS_ELEMENTS) -> FiltObject:
    """The object of a representation over an example: its cocharacter
    filtrations plus its stabilizer constraints."""
    filts = tuple(cocharacter_filtration(rep, mu) for mu in spec.boundary_cocharacters)
    return FiltObject(rep, spec.stabilizer_action(rep, style), filts)


def multiplicity(rep: RepData, spec: VarietySpec, style: str = H_STYLE_LIE_PLUS_ELEMENTS) -> int:
    """Multiplicity of rep in the coordinate ring of the example, computed
    as the Hom dimension to the trivial object."""
    triv = spec.trivial_rep()
    return hom_dim(filt_object(rep, spec, style), filt_object(triv, spec, style))


def multiplicity_table(
    spec: VarietySpec,
    labels: Iterable[object],
    style: str = H_STYLE_LIE_PLUS_ELEMENTS,
) -> list[tuple[object, int]]:
    """One multiplicity per label, in sorted label order."""
    out = []
    for label in sorted(labels):
        out.append((label, multiplicity(rep_from_label(spec.group, label), spec, style)))
    return out


def grid_labels(
    group: str,
    n_range: Sequence[int],
    m_range: Sequence[int],
    n2_range: Sequence[int] | None = None,
    m2_range: Sequence[int] | None = None,
) -> list[object]:
    """Labels of a rectangular grid; product groups reuse the first factor's
    ranges unless the second factor's are given."""
    if group == "GL2":
        return [(n, m) for n in n_range for m in m_range]
    if group == "GL2xGL2":
        n2 = n_range if n2_range is None else n2_range
        m2 = m_range if m2_range is None else m2_range
        return [((n, m), (np_, mp)) for n in n_range for m in m_range for np_ in n2 for mp in m2]
    raise ValueError(f"no labeled grid for group {group!r}")
