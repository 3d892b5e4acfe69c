"""Concrete representation data for GL2 and GL2 x GL2.

Irreducible GL2 representations are labeled (n, m): the n-th symmetric power
of the standard representation twisted by the m-th power of the determinant.
They are realized on the monomial basis x^(n-j) y^j, j = 0..n, where the
diagonal torus diag(t1, t2) acts on basis vector j with weight
(n - j + m, j + m).

Operator conventions.  Action operators are column-convention matrices
(columns are images of basis vectors) and are listed in a fixed order so
that operators of two representations can be paired positionally:

    GL2:       (e, f, h1, h2)       e = raising, f = lowering,
                                    h1, h2 = diagonal torus generators
    GL2 x GL2: the four operators of the left factor (Kronecker with the
               identity on the right), then the four of the right factor.

The raising operator e sends basis vector j to j * (vector j-1), shifting
weights by (1, -1); f sends j to (n - j) * (vector j+1); [e, f] = h1 - h2.
The determinant twist shifts h1 and h2 by m but leaves e and f alone.

The public sym_power_matrix follows the classical substitution layout (row i
lists the expansion of the image of the i-th monomial) because that is the
shape in which such matrices are usually tabulated; it is multiplicative as
written.  Column-convention operators used internally are its transpose
applied to the transposed argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Mat, kron

Weight = tuple[int, ...]
Gl2Label = tuple[int, int]
ProductLabel = tuple[Gl2Label, Gl2Label]

H_STYLE_LIE_ONLY = "lie_only"
H_STYLE_LIE_PLUS_ELEMENTS = "lie_plus_elements"
H_STYLES = (H_STYLE_LIE_ONLY, H_STYLE_LIE_PLUS_ELEMENTS)

# Stabilizer data for the binary-quadratic-forms example, in the monomial
# basis of the ambient GL2.  The connected stabilizer of the base quadratic
# form is the torus t -> [[t, 1/t - t], [0, 1/t]]; conjugating by the
# unipotent DIAGONALIZER below turns it into diag(t, 1/t).  The full
# stabilizer of a nondegenerate binary form has a second component; the
# REFLECTION below generates it (determinant -1, squares to the identity)
# and diagonalizes to the basis swap.
BINARY_FORMS_TORUS_GENERATOR = Mat.from_rows([[1, -2], [0, -1]])
BINARY_FORMS_REFLECTION = Mat.from_rows([[1, 0], [1, -1]])
BINARY_FORMS_DIAGONALIZER = Mat.from_rows([[1, 1], [0, 1]])


@dataclass(frozen=True)
class RepData:
    """A representation as weight data plus explicit action operators."""

    dim: int
    weights: tuple[Weight, ...]
    action_ops: tuple[Mat, ...]
    label: object = None

    def __post_init__(self) -> None:
        if len(self.weights) != self.dim:
            raise ValueError("need one weight per basis vector")
        for op in self.action_ops:
            if op.rows != self.dim or op.cols != self.dim:
                raise ValueError("action operators must be square of the representation dimension")


@dataclass(frozen=True)
class GroupActionData:
    """Equivariance constraints: a map f between two objects carrying data
    (A_1..A_k) and (B_1..B_k) is equivariant iff f A_i = B_i f for all i."""

    dim: int
    intertwiner_constraints: tuple[Mat, ...]

    def __post_init__(self) -> None:
        for op in self.intertwiner_constraints:
            if op.rows != self.dim or op.cols != self.dim:
                raise ValueError("constraint matrices must be square of the object dimension")


def _lie_op(x: Mat, n: int, m: int) -> Mat:
    """Derived action of the 2x2 matrix x on monomials, plus m tr(x) from
    the determinant twist."""
    a, b, c, d = x.at(0, 0), x.at(0, 1), x.at(1, 0), x.at(1, 1)
    tw = m * (a + d)
    ent = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        ent[j][j] = (n - j) * a + j * d + tw
        if j + 1 <= n:
            ent[j + 1][j] = (n - j) * c
        if j - 1 >= 0:
            ent[j - 1][j] = j * b
    return Mat.from_rows(ent)


_E12 = Mat.from_rows([[0, 1], [0, 0]])
_E21 = Mat.from_rows([[0, 0], [1, 0]])
_E11 = Mat.from_rows([[1, 0], [0, 0]])
_E22 = Mat.from_rows([[0, 0], [0, 1]])


def irrep_gl2(n: int, m: int) -> RepData:
    """The irreducible GL2 representation labeled (n, m)."""
    if n < 0:
        raise ValueError("the symmetric-power degree n must be nonnegative")
    weights = tuple((n - j + m, j + m) for j in range(n + 1))
    ops = tuple(_lie_op(x, n, m) for x in (_E12, _E21, _E11, _E22))
    return RepData(n + 1, weights, ops, label=(n, m))


def sym_power_matrix(g: Mat, n: int) -> Mat:
    """Degree-n symmetric power of a 2x2 matrix on the monomial basis.

    Row i lists the coefficients of (a x + b y)^(n-i) (c x + d y)^i where
    g = [[a, b], [c, d]].  Satisfies sym(g @ h) = sym(g) @ sym(h).
    """
    if n < 0:
        raise ValueError("the symmetric-power degree n must be nonnegative")
    if g.rows != 2 or g.cols != 2:
        raise ValueError("sym_power_matrix expects a 2x2 matrix")
    a, b, c, d = g.at(0, 0), g.at(0, 1), g.at(1, 0), g.at(1, 1)
    rows = []
    for i in range(n + 1):
        poly = [Fraction(1)]  # coefficients on x^(deg-j) y^j
        for _ in range(n - i):
            poly = _mul_linear(poly, a, b)
        for _ in range(i):
            poly = _mul_linear(poly, c, d)
        rows.append(poly)
    return Mat.from_rows(rows, n + 1)


def _mul_linear(poly: list[Fraction], u: Fraction, v: Fraction) -> list[Fraction]:
    # multiply a binary form, coefficients on x^(deg-j) y^j, by (u x + v y)
    out = [Fraction(0)] * (len(poly) + 1)
    for j, coeff in enumerate(poly):
        out[j] += u * coeff
        out[j + 1] += v * coeff
    return out


def sym_operator(g: Mat, n: int) -> Mat:
    """Column-convention operator of g on the degree-n monomial basis."""
    return sym_power_matrix(g.transpose(), n).transpose()


def irrep_element(g: Mat, n: int, m: int) -> Mat:
    """Column-convention matrix of a group element on the representation (n, m)."""
    det = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0)
    if det == 0:
        raise ValueError("group element must be invertible")
    return sym_operator(g, n).scale(det**m)


def dual(n: int, m: int) -> Gl2Label:
    """Label of the dual representation; involutive."""
    if n < 0:
        raise ValueError("the symmetric-power degree n must be nonnegative")
    return (n, -n - m)


def clebsch_gordan(a: Gl2Label, b: Gl2Label) -> tuple[Gl2Label, ...]:
    """Decomposition of (n, m) tensor (n', m') into irreducible labels."""
    n, m = a
    np_, mp = b
    if n < 0 or np_ < 0:
        raise ValueError("the symmetric-power degrees must be nonnegative")
    return tuple((n + np_ - 2 * j, m + mp + j) for j in range(min(n, np_) + 1))


def external_rep(a: Gl2Label, b: Gl2Label) -> RepData:
    """External product of two GL2 irreducibles as a GL2 x GL2 representation."""
    left = irrep_gl2(*a)
    right = irrep_gl2(*b)
    weights = tuple(w1 + w2 for w1 in left.weights for w2 in right.weights)
    il, ir = Mat.identity(left.dim), Mat.identity(right.dim)
    ops = tuple(kron(op, ir) for op in left.action_ops) + tuple(kron(il, op) for op in right.action_ops)
    return RepData(left.dim * right.dim, weights, ops, label=(a, b))


def restrict_to_diagonal(w: RepData) -> RepData:
    """Restriction of a GL2 x GL2 representation to the diagonal copy of GL2."""
    if any(len(x) != 4 for x in w.weights):
        raise ValueError("diagonal restriction expects 4-component weights")
    if len(w.action_ops) != 8:
        raise ValueError("diagonal restriction expects paired factor operators")
    weights = tuple((a + c, b + d) for (a, b, c, d) in w.weights)
    ops = tuple(w.action_ops[k] + w.action_ops[k + 4] for k in range(4))
    return RepData(w.dim, weights, ops, label=None)


def stabilizer_action_binary_forms(n: int, m: int, style: str = H_STYLE_LIE_PLUS_ELEMENTS) -> GroupActionData:
    """Equivariance constraints for the binary-forms stabilizer on (n, m).

    lie_only uses the generator of the connected stabilizer torus; the
    m-twist drops out because the torus has determinant 1.  The default
    style also adds the determinant -1 reflection of the full stabilizer,
    whose action on (n, m) carries the factor (-1)^m; the element at
    parameter t = -1 of the torus is minus the identity, which lies in the
    connected component and adds no constraint beyond the generator.
    """
    if style not in H_STYLES:
        raise ValueError(f"unknown constraint style {style!r}")
    torus = _lie_op(BINARY_FORMS_TORUS_GENERATOR, n, m)
    if style == H_STYLE_LIE_ONLY:
        return GroupActionData(n + 1, (torus,))
    reflection = irrep_element(BINARY_FORMS_REFLECTION, n, m)
    return GroupActionData(n + 1, (torus, reflection))


def rep_from_label(group: str, label: object) -> RepData:
    """Build the representation for a GL2 or GL2 x GL2 label."""
    if group == "GL2":
        n, m = label  # type: ignore[misc]
        return irrep_gl2(int(n), int(m))
    if group == "GL2xGL2":
        a, b = label  # type: ignore[misc]
        return external_rep((int(a[0]), int(a[1])), (int(b[0]), int(b[1])))
    raise ValueError(f"no labeled representations for group {group!r}")


def weights_of_label(label: object) -> tuple[Weight, ...]:
    """Weight list of a labeled irreducible without building operators."""
    if _is_gl2_label(label):
        n, m = label  # type: ignore[misc]
        return tuple((n - j + m, j + m) for j in range(n + 1))
    a, b = label  # type: ignore[misc]
    return tuple(w1 + w2 for w1 in weights_of_label(tuple(a)) for w2 in weights_of_label(tuple(b)))


def _is_gl2_label(label: object) -> bool:
    return (
        isinstance(label, Sequence)
        and len(label) == 2
        and all(isinstance(c, int) for c in label)
    )
