"""Crystal operators on KR columns.

Classical operators (labels 1..n) act through the embedding of a column
into the tensor power of the rank-one crystal: each letter carries at
most one in- and one out-arrow per label, and the usual signature
cancellation picks the acted letter.

The affine operators (label 0) act case by case according to which of
the boundary letters 1, 2, 2bar, 1bar the column contains, through the
filling map F (insert minimal admissible pairs (i, ibar) to reach a
target height), the dropping map D (its inverse), and their index-shifted
variants acting on columns that avoid the four boundary letters.

All functions are pure; per-column results are memoized, and the caches
are safe under concurrent reads.
"""
from __future__ import annotations

import functools

from .tableau import Column, is_kr_column, letter_rank, letter_weight
from .weight import Weight

# ---------------------------------------------------------------------------
# letter-level operators (the rank-one crystal, including its 0-arrows)


def letter_f(i: int, x: int, n: int) -> int | None:
    """Image of a letter under the lowering operator with label i."""
    if i == 0:
        if x == -1:
            return 2
        if x == -2:
            return 1
        return None
    if i == n:
        if x == n - 1:
            return -n
        if x == n:
            return -(n - 1)
        return None
    # 1 <= i <= n - 1
    if x == i:
        return i + 1
    if x == -(i + 1):
        return -i
    return None


def letter_e(i: int, x: int, n: int) -> int | None:
    """Image of a letter under the raising operator with label i."""
    if i == 0:
        if x == 2:
            return -1
        if x == 1:
            return -2
        return None
    if i == n:
        if x == -n:
            return n - 1
        if x == -(n - 1):
            return n
        return None
    if x == i + 1:
        return i
    if x == -i:
        return -(i + 1)
    return None


# ---------------------------------------------------------------------------
# classical operators on columns via the signature rule


def _signature(i: int, col: Column) -> tuple[list[int], list[int]]:
    """Positions of uncancelled plus and minus signs for label i.

    Each letter contributes a minus when the raising operator acts on it
    and a plus when the lowering operator does. A plus followed (in
    reading order) by a minus cancels. Returns (plus_positions,
    minus_positions), both ascending.
    """
    n = col.n
    plus_stack: list[int] = []
    minus_out: list[int] = []
    for pos, x in enumerate(col.letters):
        if letter_e(i, x, n) is not None:
            if plus_stack:
                plus_stack.pop()
            else:
                minus_out.append(pos)
        if letter_f(i, x, n) is not None:
            plus_stack.append(pos)
    return plus_stack, minus_out


def classical_f(i: int, col: Column) -> Column | None:
    """Lowering operator for a classical label i in 1..n."""
    if not 1 <= i <= col.n:
        raise ValueError(f"classical label must lie in 1..{col.n}, got {i}")
    plus, _ = _signature(i, col)
    if not plus:
        return None
    pos = plus[0]
    letters = list(col.letters)
    letters[pos] = letter_f(i, letters[pos], col.n)
    out = Column(col.n, tuple(letters))
    if not is_kr_column(out):
        raise RuntimeError(f"lowering {col} with label {i} produced invalid {out}")
    return out


def classical_e(i: int, col: Column) -> Column | None:
    """Raising operator for a classical label i in 1..n."""
    if not 1 <= i <= col.n:
        raise ValueError(f"classical label must lie in 1..{col.n}, got {i}")
    _, minus = _signature(i, col)
    if not minus:
        return None
    pos = minus[-1]
    letters = list(col.letters)
    letters[pos] = letter_e(i, letters[pos], col.n)
    out = Column(col.n, tuple(letters))
    if not is_kr_column(out):
        raise RuntimeError(f"raising {col} with label {i} produced invalid {out}")
    return out


# ---------------------------------------------------------------------------
# filling and dropping


def _insert_pair(letters: list[int], v: int, n: int) -> list[int]:
    """Insert the pair (v, vbar), v < n, at its order positions."""
    out = list(letters)
    pos_up = sum(1 for x in out if letter_rank(x, n) < v)
    out.insert(pos_up, v)
    rank_down = 2 * n - v
    pos_down = sum(1 for x in out if letter_rank(x, n) < rank_down)
    out.insert(pos_down, -v)
    return out


def _pair_dist(letters: list[int] | tuple[int, ...], v: int) -> int | None:
    """dist of the pair (v, vbar), None when the pair is absent or the
    barred letter comes first."""
    try:
        a = letters.index(v)
        b = letters.index(-v)
    except ValueError:
        return None
    if a > b:
        return None
    return a + len(letters) + 1 - b


def _paired_values(letters: list[int]) -> list[int]:
    return [v for v in {abs(x) for x in letters} if _pair_dist(letters, v) is not None]


def _fill_any(col: Column, k: int) -> Column:
    """Fill a valid column to height k by inserting pairs (i_j, i_j bar).

    At step j the value i_j > i_{j-1} is minimal such that (1) neither
    letter of the pair is present, (2) after insertion
    dist(i_j, i_j bar) >= i_j + j, and (3) after insertion every other
    pair (a, abar) with a > i_j keeps dist(a, abar) <= a + j.
    """
    n, h = col.n, col.height
    if h > k or (k - h) % 2:
        raise ValueError(f"cannot fill a height-{h} column to height {k}")
    cur = list(col.letters)
    prev = 0
    for j in range(1, (k - h) // 2 + 1):
        chosen = None
        for v in range(prev + 1, n + 1):
            if v in cur or -v in cur:
                continue
            tent = _insert_pair(cur, v, n)
            if _pair_dist(tent, v) < v + j:
                continue
            if any(
                _pair_dist(tent, a) > a + j
                for a in _paired_values(tent)
                if a > v
            ):
                continue
            chosen = v
            cur = tent
            break
        if chosen is None:
            raise RuntimeError(f"no admissible pair while filling {col} to height {k}")
        prev = chosen
    return Column(n, tuple(cur))


def fill(col: Column, k: int) -> Column:
    """The filling map on classical columns (KN validity required)."""
    from .tableau import is_kn_column

    if not is_kn_column(col):
        raise ValueError(f"{col!r} is not a valid classical column")
    return _fill_any(col, k)


def drop(col: Column) -> Column:
    """The dropping map: remove the pairs found by the greedy scan.

    Starting from i_0 = 0, repeatedly pick i_j > i_{j-1} minimal with the
    pair (i_j, i_j bar) present and dist(i_j, i_j bar) >= i_j + j; all
    found pairs are removed at the end. Inverse to the filling map.
    """
    letters = list(col.letters)
    h = len(letters)
    found: list[int] = []
    prev = 0
    while True:
        j = len(found) + 1
        hit = None
        for v in range(prev + 1, col.n + 1):
            d = _pair_dist(letters, v)
            if d is not None and d >= v + j:
                hit = v
                break
        if hit is None:
            break
        found.append(hit)
        prev = hit
    if not found:
        return col
    out = list(letters)
    for v in found:
        out.remove(v)
        out.remove(-v)
    return Column(col.n, tuple(out))


def _shift(col: Column, d: int) -> Column:
    return Column(col.n, tuple(x - d if x > 0 else x + d for x in col.letters))


def _check_tilde_domain(col: Column) -> None:
    if any(abs(x) <= 2 for x in col.letters):
        raise ValueError(f"{col!r} contains a boundary letter 1, 2, 2bar or 1bar")


def fill_tilde(col: Column, k: int) -> Column:
    """Filling conjugated by the index shift i -> i - 2; defined on
    columns avoiding 1, 2, 2bar, 1bar."""
    _check_tilde_domain(col)
    return _shift(_fill_any(_shift(col, 2), k), -2)


def drop_tilde(col: Column) -> Column:
    """Dropping conjugated by the index shift i -> i - 2."""
    _check_tilde_domain(col)
    return _shift(drop(_shift(col, 2)), -2)


# ---------------------------------------------------------------------------
# affine operators


def _boundary_split(col: Column) -> tuple[tuple[bool, bool, bool, bool], Column]:
    ls = col.letters
    pat = (1 in ls, 2 in ls, -2 in ls, -1 in ls)
    x = Column(col.n, tuple(v for v in ls if abs(v) > 2))
    return pat, x


def _with(col: Column, front: tuple[int, ...] = (), back: tuple[int, ...] = ()) -> Column:
    return Column(col.n, front + col.letters + back)


def affine_e(col: Column) -> Column | None:
    """The raising operator with label 0.

    Dispatch is by membership of the boundary letters (1, 2, 2bar, 1bar),
    which makes the cases mutually exclusive and exhaustive.
    """
    k = col.height
    pat, x = _boundary_split(col)
    if pat == (True, True, False, False):
        res = _fill_any(drop_tilde(x), k)
    elif pat == (True, True, True, False):
        res = _with(fill_tilde(x, k - 1), back=(-2,))
    elif pat == (True, True, False, True):
        res = _with(fill_tilde(x, k - 1), back=(-1,))
    elif pat == (True, True, True, True):
        res = _with(fill_tilde(x, k - 2), back=(-2, -1))
    elif pat == (True, False, False, False):
        res = _fill_any(_with(drop_tilde(x), back=(-2,)), k)
    elif pat == (False, True, False, False):
        res = _fill_any(_with(drop_tilde(x), back=(-1,)), k)
    elif pat == (True, False, False, True) and drop_tilde(x) == x:
        res = _with(x, back=(-2, -1))
    else:
        return None
    if not is_kr_column(res):
        raise RuntimeError(f"affine raising of {col} produced invalid {res}")
    return res


def affine_f(col: Column) -> Column | None:
    """The lowering operator with label 0 (inverse to affine_e)."""
    k = col.height
    pat, x = _boundary_split(col)
    if pat == (False, False, True, True):
        res = _fill_any(drop_tilde(x), k)
    elif pat == (False, True, True, True):
        res = _with(fill_tilde(x, k - 1), front=(2,))
    elif pat == (True, False, True, True):
        res = _with(fill_tilde(x, k - 1), front=(1,))
    elif pat == (True, True, True, True):
        res = _with(fill_tilde(x, k - 2), front=(1, 2))
    elif pat == (False, False, False, True):
        res = _fill_any(_with(drop_tilde(x), front=(2,)), k)
    elif pat == (False, False, True, False):
        res = _fill_any(_with(drop_tilde(x), front=(1,)), k)
    elif pat == (True, False, False, True) and drop_tilde(x) == x:
        res = _with(x, front=(1, 2))
    else:
        return None
    if not is_kr_column(res):
        raise RuntimeError(f"affine lowering of {col} produced invalid {res}")
    return res


# ---------------------------------------------------------------------------
# unified interface with caching


@functools.lru_cache(maxsize=None)
def f_op(i: int, col: Column) -> Column | None:
    """Lowering operator for any label 0..n."""
    return affine_f(col) if i == 0 else classical_f(i, col)


@functools.lru_cache(maxsize=None)
def e_op(i: int, col: Column) -> Column | None:
    """Raising operator for any label 0..n."""
    return affine_e(col) if i == 0 else classical_e(i, col)


_ITERATION_CAP = 10_000


@functools.lru_cache(maxsize=None)
def eps_phi(col: Column, i: int) -> tuple[int, int]:
    """(eps_i, phi_i): string lengths computed by iterating the
    operators."""
    eps = 0
    cur = col
    while (nxt := e_op(i, cur)) is not None:
        cur = nxt
        eps += 1
        if eps > _ITERATION_CAP:
            raise RuntimeError(f"raising with label {i} does not terminate from {col}")
    phi = 0
    cur = col
    while (nxt := f_op(i, cur)) is not None:
        cur = nxt
        phi += 1
        if phi > _ITERATION_CAP:
            raise RuntimeError(f"lowering with label {i} does not terminate from {col}")
    return eps, phi


@functools.lru_cache(maxsize=None)
def wt(col: Column) -> Weight:
    """Sum of the letter weights."""
    out = Weight.zero(col.n)
    for x in col.letters:
        out = out + letter_weight(x, col.n)
    return out
