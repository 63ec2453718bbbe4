"""Tensor products of crystal elements and the distinguished subsets of
the two-fold tensor square used in the decomposition analysis.

The two-factor rule: the lowering operator acts on the left factor when
phi_i(left) > eps_i(right) and on the right factor otherwise; the raising
operator acts on the left when phi_i(left) >= eps_i(right). Longer
tensors are bracketed to the left.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import crystal_ops
from .tableau import Column
from .weight import Weight

CrystalElt = "Column | TensorElt"


@dataclass(frozen=True)
class TensorElt:
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a tensor element needs at least one factor")
        ranks = {rank_of(f) for f in self.factors}
        if len(ranks) != 1:
            raise ValueError(f"factors of mixed rank: {ranks}")

    @property
    def n(self) -> int:
        return rank_of(self.factors[0])

    def __str__(self) -> str:
        return " | ".join(str(f) for f in self.factors)


def rank_of(x) -> int:
    return x.n


def weight_of(x) -> Weight:
    if isinstance(x, Column):
        return crystal_ops.wt(x)
    out = Weight.zero(x.n)
    for f in x.factors:
        out = out + weight_of(f)
    return out


def eps(i: int, x) -> int:
    if isinstance(x, Column):
        return crystal_ops.eps_phi(x, i)[0]
    return _eps_factors(i, x.factors)


def phi(i: int, x) -> int:
    if isinstance(x, Column):
        return crystal_ops.eps_phi(x, i)[1]
    return _phi_factors(i, x.factors)


def _eps_factors(i: int, fs: tuple) -> int:
    if len(fs) == 1:
        return eps(i, fs[0])
    head, last = fs[:-1], fs[-1]
    e_head = _eps_factors(i, head)
    return max(e_head, e_head + eps(i, last) - _phi_factors(i, head))


def _phi_factors(i: int, fs: tuple) -> int:
    if len(fs) == 1:
        return phi(i, fs[0])
    head, last = fs[:-1], fs[-1]
    p_last = phi(i, last)
    return max(p_last, _phi_factors(i, head) + p_last - eps(i, last))


def act_f(i: int, x):
    """Lowering operator on a column or tensor element; None if killed."""
    if isinstance(x, Column):
        return crystal_ops.f_op(i, x)
    new = _f_factors(i, x.factors)
    return TensorElt(new) if new is not None else None


def act_e(i: int, x):
    """Raising operator on a column or tensor element; None if killed."""
    if isinstance(x, Column):
        return crystal_ops.e_op(i, x)
    new = _e_factors(i, x.factors)
    return TensorElt(new) if new is not None else None


def _f_factors(i: int, fs: tuple) -> tuple | None:
    if len(fs) == 1:
        y = act_f(i, fs[0])
        return None if y is None else (y,)
    head, last = fs[:-1], fs[-1]
    if _phi_factors(i, head) > eps(i, last):
        new = _f_factors(i, head)
        return None if new is None else new + (last,)
    y = act_f(i, last)
    return None if y is None else head + (y,)


def _e_factors(i: int, fs: tuple) -> tuple | None:
    if len(fs) == 1:
        y = act_e(i, fs[0])
        return None if y is None else (y,)
    head, last = fs[:-1], fs[-1]
    if _phi_factors(i, head) >= eps(i, last):
        new = _e_factors(i, head)
        return None if new is None else new + (last,)
    y = act_e(i, last)
    return None if y is None else head + (y,)


def tensor_f(i: int, t: TensorElt) -> TensorElt | None:
    return act_f(i, t)


def tensor_e(i: int, t: TensorElt) -> TensorElt | None:
    return act_e(i, t)


def tensor_stats(i: int, t: TensorElt) -> tuple[int, int]:
    """(eps_i, phi_i) from the closed-form tensor recursion."""
    return eps(i, t), phi(i, t)


# ---------------------------------------------------------------------------
# distinguished subsets of the tensor square


def hw_column(n: int, k: int, m: int) -> Column:
    """The classical highest-weight column of height k whose weight is
    the (k - 2m)-th fundamental weight: 1 .. k-m followed by the barred
    run (k-m)bar down to (k-2m+1)bar."""
    if not 0 <= 2 * m <= k:
        raise ValueError(f"need 0 <= 2m <= k, got m = {m}")
    up = list(range(1, k - m + 1))
    down = [-v for v in range(k - m, k - 2 * m, -1)]
    return Column(n, tuple(up + down))


def _run_column(n: int, ups: list[int], downs: list[int]) -> Column:
    return Column(n, tuple(ups + [-v for v in downs]))


def _mixed_first(n: int, k: int, m1: int, m2: int, p: int) -> Column:
    """Right factor of the first-sum terms: two unbarred runs and one
    barred run."""
    m21 = m2 - m1
    ms = m1 + m2
    ups = list(range(1, k - m21 - p + 1)) + list(range(k - 2 * p + 1, k - 2 * m1 + 1))
    downs = list(range(k - m21 - p, k - 2 * m2, -1))
    return _run_column(n, ups, downs)


def _mixed_second(n: int, k: int, m1: int, m2: int, p: int) -> Column:
    """Right factor of the second-sum terms: one unbarred run and two
    barred runs."""
    ms = m1 + m2
    ups = list(range(1, k - ms + p + 1))
    downs = list(range(k - ms + p, k - 2 * m1, -1)) + list(
        range(k - 2 * p, k - 2 * m2, -1)
    )
    return _run_column(n, ups, downs)


def hw_pair_terms(n: int, k: int, m1: int, m2: int) -> list[TensorElt]:
    """The tensor terms of the highest-weight vector with weight
    fundamental(k - 2m1) + fundamental(k - 2m2) inside the tensor square:
    the left factor at index p is the paired column of drop-height
    k - 2p, the right factor is the matching mixed column."""
    if not 0 <= m1 <= m2 <= k // 2:
        raise ValueError(f"need 0 <= m1 <= m2 <= k', got ({m1}, {m2})")
    M = max(m1, m2 - m1)
    terms = []
    for p in range(m1, M + 1):
        terms.append(TensorElt((hw_column(n, k, p), _mixed_first(n, k, m1, m2, p))))
    for p in range(M + 1, m2 + 1):
        terms.append(TensorElt((hw_column(n, k, p), _mixed_second(n, k, m1, m2, p))))
    return terms


def b1h(n: int, k: int) -> set[TensorElt]:
    """Pairs of classical highest-weight columns, the generators of the
    image subcrystal of the tensor square."""
    kp = k // 2
    return {
        TensorElt((hw_column(n, k, m2), hw_column(n, k, m1)))
        for m1 in range(kp + 1)
        for m2 in range(m1, kp + 1)
    }


def b2h(n: int, k: int) -> set[TensorElt]:
    """All highest-weight-vector tensor terms not already generators of
    the image subcrystal."""
    kp = k // 2
    terms: set[TensorElt] = set()
    for m1 in range(kp + 1):
        for m2 in range(m1, kp + 1):
            terms.update(hw_pair_terms(n, k, m1, m2))
    return terms - b1h(n, k)


def generate_Ba(n: int, k: int, a: int) -> frozenset[TensorElt]:
    """Closure of the a-th generator set under all classical lowering
    operators (labels 1..n only)."""
    if a not in (1, 2):
        raise ValueError(f"a must be 1 or 2, got {a}")
    seeds = b1h(n, k) if a == 1 else b2h(n, k)
    seen: set[TensorElt] = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = []
        for t in frontier:
            for i in range(1, n + 1):
                y = act_f(i, t)
                if y is not None and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def b3(n: int, k: int, b1=None, b2=None) -> frozenset[TensorElt]:
    """Complement of the two generated subsets in the full tensor
    square."""
    from .tableau import enumerate_columns

    cols = enumerate_columns(n, k)
    b1 = generate_Ba(n, k, 1) if b1 is None else b1
    b2 = generate_Ba(n, k, 2) if b2 is None else b2
    square = {TensorElt((c1, c2)) for c1 in cols for c2 in cols}
    return frozenset(square - set(b1) - set(b2))


def restricted_paths(n: int, k: int, l: int, b1: Iterable[TensorElt] | None = None) -> set[TensorElt]:
    """Length-l tensors whose adjacent factor pairs all lie in the image
    subcrystal of the tensor square."""
    from .tableau import enumerate_columns

    if l < 1:
        raise ValueError(f"need l >= 1, got {l}")
    cols = enumerate_columns(n, k)
    if l == 1:
        return {TensorElt((c,)) for c in cols}
    b1 = generate_Ba(n, k, 1) if b1 is None else b1
    adjacency: dict[Column, list[Column]] = {}
    for t in b1:
        c1, c2 = t.factors
        adjacency.setdefault(c1, []).append(c2)
    paths = [(c,) for c in adjacency]
    for _ in range(l - 1):
        paths = [p + (c,) for p in paths for c in adjacency.get(p[-1], ())]
    return {TensorElt(p) for p in paths}
