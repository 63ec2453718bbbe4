"""The classical D_n weight lattice in orthonormal coordinates.

A weight is stored through doubled coordinates: coords2[i] = 2 * (lambda,
eps_{i+1}), so spin weights (half-integral in the eps basis) remain exact
integers. All entries of a valid weight share the same parity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Weight:
    n: int
    coords2: tuple[int, ...]

    def __post_init__(self):
        if self.n < 4:
            raise ValueError(f"type D rank must be at least 4, got {self.n}")
        if len(self.coords2) != self.n:
            raise ValueError("coords2 length must equal the rank")
        parities = {c & 1 for c in self.coords2}
        if len(parities) > 1:
            raise ValueError(f"mixed parities in doubled coordinates: {self.coords2}")

    @staticmethod
    def zero(n: int) -> "Weight":
        return Weight(n, (0,) * n)

    @staticmethod
    def from_eps(n: int, eps_coeffs: Sequence[int]) -> "Weight":
        """Weight with integral eps-coordinates (doubling happens here)."""
        return Weight(n, tuple(2 * c for c in eps_coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords2)

    def __add__(self, other: "Weight") -> "Weight":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return Weight(self.n, tuple(a + b for a, b in zip(self.coords2, other.coords2)))

    def __sub__(self, other: "Weight") -> "Weight":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return Weight(self.n, tuple(a - b for a, b in zip(self.coords2, other.coords2)))

    def __neg__(self) -> "Weight":
        return Weight(self.n, tuple(-a for a in self.coords2))

    def as_json(self) -> dict:
        return {"coords2": list(self.coords2)}


def simple_root(n: int, i: int) -> Weight:
    """Simple root alpha_i in eps-coordinates, i in 0..n.

    For i = 0 the classical image is returned: the delta direction is
    dropped, leaving -eps_1 - eps_2.
    """
    if not 0 <= i <= n:
        raise ValueError(f"root index must lie in 0..{n}, got {i}")
    eps = [0] * n
    if i == 0:
        eps[0] = -1
        eps[1] = -1
    elif i == n:
        eps[n - 2] = 1
        eps[n - 1] = 1
    else:
        eps[i - 1] = 1
        eps[i] = -1
    return Weight.from_eps(n, eps)


def fundamental(n: int, i: int) -> Weight:
    """Fundamental weight of D_n for i in 1..n; the two spin weights are
    half-integral in the eps basis."""
    if not 1 <= i <= n:
        raise ValueError(f"fundamental weight index must lie in 1..{n}, got {i}")
    if i <= n - 2:
        return Weight.from_eps(n, [1] * i + [0] * (n - i))
    coords2 = [1] * n
    if i == n - 1:
        coords2[n - 1] = -1
    return Weight(n, tuple(coords2))


def pairing_h(w: Weight, i: int) -> int:
    """The integer <h_i, w>.

    All simple roots of D_n^(1) have the same length, so the pairing is
    the eps inner product with alpha_i (classical image for i = 0).
    """
    root = simple_root(w.n, i)
    twice = sum(a * b for a, b in zip(w.coords2, root.coords2))
    if twice % 4:
        raise ValueError(f"pairing of {w} with alpha_{i} is not integral")
    # coords2 carries a factor 2 on each side
    return twice // 4


def lambda_of_c(n: int, k: int, l: int, c: Sequence[int]) -> Weight:
    """The dominant weight attached to a nonincreasing sequence c.

    With c_0 = l and c_{k'+1} = 0 (k' = k // 2), the weight is
    sum_j (c_j - c_{j+1}) * fundamental(k - 2j), taking the index-0
    fundamental weight to be 0.
    """
    validate_c(n, k, l, c)
    kp = k // 2
    full = [l] + list(c) + [0]
    out = Weight.zero(n)
    for j in range(kp + 1):
        coeff = full[j] - full[j + 1]
        idx = k - 2 * j
        if coeff and idx >= 1:
            term = fundamental(n, idx)
            out = out + Weight(n, tuple(coeff * t for t in term.coords2))
    return out


def validate_c(n: int, k: int, l: int, c: Sequence[int]) -> None:
    """Check that c is a valid component-index sequence for (n, k, l)."""
    if n < 4 or not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n - 2 with n >= 4, got (n, k) = ({n}, {k})")
    if l < 1:
        raise ValueError(f"need l >= 1, got {l}")
    kp = k // 2
    if len(c) != kp:
        raise ValueError(f"c must have length k' = {kp}, got {len(c)}")
    full = [l] + list(c) + [0]
    for a, b in zip(full, full[1:]):
        if a < b:
            raise ValueError(f"c must be nonincreasing with l >= c_1 and c_k' >= 0: {list(c)}")
