"""Column tableaux over the type-D alphabet {1, ..., n, nbar, ..., 1bar}.

A letter is a signed integer: +i is the unbarred letter i, -i is the
barred letter i-bar. The partial order ranks letters

    1 < 2 < ... < n-1 < {n, nbar} < (n-1)bar < ... < 1bar

with n and nbar incomparable. A column is valid (a KR column, element of
B^{k,1}) when consecutive letters strictly increase, except that the two
middle letters n, nbar may follow each other in either order. A KN column
additionally satisfies the distance bound dist(p, pbar) <= p for every
matched pair; KN columns of height l realize the classical crystal of the
l-th fundamental representation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .weight import Weight

Letter = int


def check_letter(x: Letter, n: int) -> None:
    if x == 0 or abs(x) > n:
        raise ValueError(f"letter {x} out of range for rank {n}")


def letter_rank(x: Letter, n: int) -> int:
    """Position in the order chain; n and nbar share rank n."""
    return x if x > 0 else 2 * n + x


def letter_key(x: Letter, n: int) -> int:
    """Total enumeration key: 1, ..., n, nbar, ..., 1bar."""
    return x if x > 0 else 2 * n + 1 + x


def letters_admissible(x: Letter, y: Letter, n: int) -> bool:
    """May y sit directly below x in a column?"""
    if letter_rank(x, n) < letter_rank(y, n):
        return True
    return abs(x) == n and abs(y) == n and x != y


def letter_str(x: Letter) -> str:
    return str(x) if x > 0 else f"{-x}b"


def parse_letter(s: str) -> Letter:
    s = s.strip()
    if s.endswith("b"):
        return -int(s[:-1])
    return int(s)


def letter_weight(x: Letter, n: int) -> Weight:
    """eps_i for the letter i, -eps_i for i-bar."""
    check_letter(x, n)
    eps = [0] * n
    eps[abs(x) - 1] = 1 if x > 0 else -1
    return Weight.from_eps(n, eps)


@dataclass(frozen=True)
class Column:
    """A column tableau, letters listed top to bottom."""

    n: int
    letters: tuple[Letter, ...]

    @property
    def height(self) -> int:
        return len(self.letters)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(letter_key(x, self.n) for x in self.letters)

    def __str__(self) -> str:
        return " ".join(letter_str(x) for x in self.letters)

    @staticmethod
    def parse(text: str, n: int) -> "Column":
        text = text.strip()
        if not text:
            return Column(n, ())
        seps = "," if "," in text else None
        letters = tuple(parse_letter(tok) for tok in text.split(seps) if tok)
        for x in letters:
            check_letter(x, n)
        return Column(n, letters)


def dist(col: Column, a: int, b: int) -> int:
    """dist(p, pbar) = a + height + 1 - b for a matched pair at 1-based
    positions a < b."""
    h = col.height
    if not 1 <= a < b <= h:
        raise ValueError(f"positions must satisfy 1 <= a < b <= {h}, got ({a}, {b})")
    x, y = col.letters[a - 1], col.letters[b - 1]
    if x != -y:
        raise ValueError(f"letters at positions ({a}, {b}) are not a matched pair")
    return a + h + 1 - b


def _pair_positions(col: Column) -> Iterator[tuple[int, int, int]]:
    """Yield (value, a, b) with +value at 1-based a, -value at b, a < b.

    The middle value n may repeat; every unbarred-before-barred pair for
    it is reported.
    """
    for v in range(1, col.n + 1):
        ups = [i + 1 for i, x in enumerate(col.letters) if x == v]
        downs = [i + 1 for i, x in enumerate(col.letters) if x == -v]
        for a in ups:
            for b in downs:
                if a < b:
                    yield v, a, b


def is_kr_column(col: Column) -> bool:
    """Membership in B^{k,1}: strictly increasing letters with the
    {n, nbar} exception."""
    for x in col.letters:
        if x == 0 or abs(x) > col.n:
            return False
    return all(
        letters_admissible(x, y, col.n)
        for x, y in zip(col.letters, col.letters[1:])
    )


def is_kn_column(col: Column) -> bool:
    """Membership in the classical column crystal: the KR condition plus
    dist(p, pbar) <= p for every matched pair."""
    if not is_kr_column(col):
        return False
    h = col.height
    return all(a + h + 1 - b <= v for v, a, b in _pair_positions(col))


def enumerate_columns(n: int, k: int, kn_only: bool = False) -> list[Column]:
    """All valid columns of height k, lexicographic in the letter keys."""
    if not 1 <= k <= n:
        raise ValueError(f"height must lie in 1..{n}, got {k}")
    alphabet = sorted(
        [x for v in range(1, n + 1) for x in (v, -v)],
        key=lambda x: letter_key(x, n),
    )
    out: list[Column] = []
    stack: list[Letter] = []

    def extend():
        if len(stack) == k:
            col = Column(n, tuple(stack))
            if not kn_only or is_kn_column(col):
                out.append(col)
            return
        for x in alphabet:
            if stack and not letters_admissible(stack[-1], x, n):
                continue
            stack.append(x)
            extend()
            stack.pop()

    extend()
    return out
