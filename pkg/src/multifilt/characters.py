"""Character arithmetic: symmetric powers and highest-weight decomposition.

This is the independent verification route.  It never touches filtrations
or Hom solving: coordinate rings are decomposed degree by degree from raw
weight multisets, by convolving generating functions for symmetric powers
and greedily subtracting highest weights.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, TYPE_CHECKING

from .gl2 import Weight, weights_of_label

if TYPE_CHECKING:
    from .varieties import VarietySpec

WeightMultiset = dict[Weight, int]


class NegativeMultiplicity(ValueError):
    """Subtraction drove a weight multiplicity below zero: the input is not
    the character of an actual representation."""


class NotDominant(ValueError):
    """The maximal weight is not dominant: the input is not a character."""


def weight_multiset(weights: Iterable[Weight]) -> WeightMultiset:
    out: WeightMultiset = {}
    for w in weights:
        out[tuple(w)] = out.get(tuple(w), 0) + 1
    return out


def character_product(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> WeightMultiset:
    """Character of a tensor product: all pairwise weight sums."""
    out: WeightMultiset = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = tuple(x + y for x, y in zip(wa, wb))
            out[w] = out.get(w, 0) + ca * cb
    return out


def sym_power_weights(w: Mapping[Weight, int], d: int) -> WeightMultiset:
    """Character of the d-th symmetric power of a module with character w.

    Computed by convolving one generating function per distinct weight:
    a weight of multiplicity c contributes binom(a + c - 1, a) copies of
    a times the weight in degree a.
    """
    if d < 0:
        raise ValueError("symmetric-power degree must be nonnegative")
    items = sorted(w.items())
    if not items:
        if d == 0:
            return {(): 1}
        return {}
    zero = (0,) * len(items[0][0])
    layers: list[WeightMultiset] = [{zero: 1}] + [{} for _ in range(d)]
    for chi, c in items:
        nxt: list[WeightMultiset] = [{} for _ in range(d + 1)]
        for k in range(d + 1):
            for a in range(k + 1):
                count = comb(a + c - 1, a)
                shift = tuple(a * x for x in chi)
                for wt, mult in layers[k - a].items():
                    key = tuple(x + y for x, y in zip(wt, shift))
                    nxt[k][key] = nxt[k].get(key, 0) + mult * count
        layers = nxt
    return layers[d]


def decompose(w: Mapping[Weight, int]) -> dict[object, int]:
    """Decompose a genuine character into irreducible labels by repeated
    subtraction at the lexicographically maximal weight.

    Two-component weights yield GL2 labels (n, m); four-component weights
    yield GL2 x GL2 labels ((n, m), (n', m')).  Raises NotDominant or
    NegativeMultiplicity on inputs that are not characters.
    """
    remaining = {tuple(k): v for k, v in w.items() if v != 0}
    if any(v < 0 for v in remaining.values()):
        raise NegativeMultiplicity("input has negative multiplicities")
    out: dict[object, int] = {}
    while remaining:
        top = max(remaining)
        mult = remaining[top]
        label = _label_of_highest(top)
        out[label] = out.get(label, 0) + mult
        for chi in weights_of_label(label):
            c = remaining.get(chi, 0) - mult
            if c < 0:
                raise NegativeMultiplicity(f"multiplicity of weight {chi} fell below zero")
            if c == 0:
                remaining.pop(chi, None)
            else:
                remaining[chi] = c
    return out


def _label_of_highest(top: Weight) -> object:
    if len(top) == 2:
        a, b = top
        if a < b:
            raise NotDominant(f"maximal weight {top} is not dominant")
        return (a - b, b)
    if len(top) == 4:
        a, b, c, d = top
        if a < b or c < d:
            raise NotDominant(f"maximal weight {top} is not dominant")
        return ((a - b, b), (c - d, d))
    raise ValueError("decomposition handles 2- and 4-component weights only")


def label_weight_sum(label: object) -> int:
    """Common coordinate sum of all weights of the labeled irreducible."""
    if isinstance(label, tuple) and len(label) == 2 and all(isinstance(c, int) for c in label):
        n, m = label
        return n + 2 * m
    a, b = label  # type: ignore[misc]
    return label_weight_sum(tuple(a)) + label_weight_sum(tuple(b))


@lru_cache(maxsize=None)
def _degree_decomposition(dual_weights: tuple[Weight, ...], d: int) -> dict[object, int]:
    return decompose(sym_power_weights(weight_multiset(dual_weights), d))


def coordinate_ring_character(spec: "VarietySpec", d: int) -> WeightMultiset:
    """Character of the degree-d part of the coordinate ring: the d-th
    symmetric power of the dual of the ambient module."""
    dual = [tuple(-c for c in w) for w in spec.x_module_weights]
    return sym_power_weights(weight_multiset(dual), d)


def oracle_multiplicity(spec: "VarietySpec", label: object, max_degree: int | None = None) -> int:
    """Multiplicity of a labeled irreducible in the coordinate ring.

    When every generator weight has the same nonzero coordinate sum, a label
    can only appear in the single degree matching its own weight sum; that
    degree is computed directly and the answer is exact with no bound
    needed (a given max_degree still truncates).  Otherwise degrees are
    scanned up to max_degree, which is then required.
    """
    dual = tuple(sorted(tuple(-c for c in w) for w in spec.x_module_weights))
    target = label_weight_sum(label)
    sums = {sum(w) for w in dual}
    if len(sums) == 1 and 0 not in sums:
        s = sums.pop()
        if target % s != 0:
            return 0
        d = target // s
        if d < 0 or (max_degree is not None and d > max_degree):
            return 0
        return _degree_decomposition(dual, d).get(_normalize_label(label), 0)
    if max_degree is None:
        raise ValueError("generator weight sums do not determine the degree; pass max_degree")
    total = 0
    for d in range(max_degree + 1):
        total += _degree_decomposition(dual, d).get(_normalize_label(label), 0)
    return total


def _normalize_label(label: object) -> object:
    if isinstance(label, tuple) and len(label) == 2 and all(isinstance(c, int) for c in label):
        return (int(label[0]), int(label[1]))
    a, b = label  # type: ignore[misc]
    return ((int(a[0]), int(a[1])), (int(b[0]), int(b[1])))
