"""One-shot verification procedures for the checkable structural claims:
decompositions, zero-action chains, filling commutation, the restricted
path character identity, and the closed-form prepolarization norms with
their q-adic bounds.
"""
from __future__ import annotations

import itertools
import json
import time
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import graph as graphmod
from .crystal_ops import drop, e_op, eps_phi, f_op, fill, wt
from .laurent import LaurentPoly, in_c_plus_qA, in_qn_A, one, q_binomial, q_int, q_power, zero
from .tableau import Column, enumerate_columns
from .tensor import TensorElt, act_e, act_f, generate_Ba, hw_pair_terms, restricted_paths
from .weight import Weight, fundamental, lambda_of_c, pairing_h, validate_c


@dataclass
class VerificationReport:
    name: str
    params: dict
    passed: bool
    details: str
    wall_time_ms: float

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "details": self.details,
            "wall_time_ms": self.wall_time_ms,
        }

    def __str__(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"[{tag}] {self.name} {params} ({self.wall_time_ms:.0f} ms): {self.details}"


def _report(name, params, started, passed, details) -> VerificationReport:
    ms = (time.perf_counter() - started) * 1000.0
    return VerificationReport(name, params, passed, details, ms)


def _expected_kr_weights(n: int, k: int) -> Counter:
    out: Counter = Counter()
    for m in range(k // 2 + 1):
        idx = k - 2 * m
        out[fundamental(n, idx) if idx >= 1 else Weight.zero(n)] += 1
    return out


def check_fundamental_decomposition(n: int, k: int) -> VerificationReport:
    """The KR column crystal decomposes into one classical component per
    fundamental weight of matching parity below k."""
    started = time.perf_counter()
    params = {"n": n, "k": k}
    found = graphmod.decompose(enumerate_columns(n, k))
    expected = _expected_kr_weights(n, k)
    if found == expected:
        return _report("fundamental_decomposition", params, started, True,
                       f"{sum(found.values())} components as expected")
    return _report("fundamental_decomposition", params, started, False,
                   f"found {dict(found)} expected {dict(expected)}")


def check_zero_action(n: int, k: int) -> VerificationReport:
    """Label-0 inverse axiom plus vanishing of the third powers."""
    started = time.perf_counter()
    params = {"n": n, "k": k}
    cols = enumerate_columns(n, k)
    col_set = set(cols)
    for b in cols:
        y = f_op(0, b)
        if y is not None and (y not in col_set or e_op(0, y) != b):
            return _report("zero_action", params, started, False,
                           f"inverse axiom fails at lowering of {b}")
        y = e_op(0, b)
        if y is not None and (y not in col_set or f_op(0, y) != b):
            return _report("zero_action", params, started, False,
                           f"inverse axiom fails at raising of {b}")
        e, p = eps_phi(b, 0)
        if e > 2 or p > 2:
            return _report("zero_action", params, started, False,
                           f"string through {b} has eps={e} phi={p}")
    return _report("zero_action", params, started, True,
                   f"{len(cols)} elements checked")


def _bars(top: int, bottom: int) -> list[int]:
    """Barred letters with values descending from top to bottom."""
    return [-v for v in range(top, bottom - 1, -1)]


def _chain_cases(n: int, k: int):
    """Source and expected raised column for every zero-chain case, plus
    whether a second raising must be possible."""
    kp = k // 2
    top = Column(n, tuple(range(1, k + 1)))
    first = Column(n, tuple([1] + list(range(3, k + 1)) + [-1]))
    second = Column(n, tuple(list(range(3, k + 1)) + [-2, -1]))
    yield ("top-chain-step-1", top, first, True)
    yield ("top-chain-step-2", first, second, False)
    for m in range(1, kp):
        src = Column(n, tuple(list(range(1, k - m + 1)) + _bars(k - m, k - 2 * m + 1)))
        dst = Column(n, tuple(
            list(range(1, k - m)) + _bars(k - m - 1, k - 2 * m + 1) + [-2, -1]))
        yield (f"paired m={m}", src, dst, True)
    for m1 in range(kp):
        for m2 in range(m1, kp):
            m21, ms = m2 - m1, m1 + m2
            for p in range(m1, min(m21, ms - 1) + 1):
                src = Column(n, tuple(
                    list(range(1, k - m21 - p + 1))
                    + list(range(k - 2 * p + 1, k - 2 * m1 + 1))
                    + _bars(k - m21 - p, k - 2 * m2 + 1)))
                dst = Column(n, tuple(
                    list(range(1, k - m21 - p))
                    + list(range(k - 2 * p + 1, k - 2 * m1 + 1))
                    + _bars(k - m21 - p - 1, k - 2 * m2 + 1) + [-2, -1]))
                yield (f"gapped m1={m1} m2={m2} p={p}", src, dst, True)
    for m1 in range(1, kp):
        for m2 in range(m1, kp):
            m21, ms = m2 - m1, m1 + m2
            for p in range(m21 + 1, m2 + 1):
                src = Column(n, tuple(
                    list(range(1, k - ms + p + 1))
                    + _bars(k - ms + p, k - 2 * m1 + 1)
                    + _bars(k - 2 * p, k - 2 * m2 + 1)))
                dst = Column(n, tuple(
                    list(range(1, k - ms + p))
                    + _bars(k - ms + p - 1, k - 2 * m1 + 1)
                    + _bars(k - 2 * p, k - 2 * m2 + 1) + [-2, -1]))
                yield (f"double-barred m1={m1} m2={m2} p={p}", src, dst, True)


def check_e0_chains(n: int, k: int) -> VerificationReport:
    """Reproduce the tabulated zero-raising images on all the structured
    column families."""
    from .tableau import is_kr_column

    started = time.perf_counter()
    params = {"n": n, "k": k}
    checked = skipped = 0
    for name, src, dst, second in _chain_cases(n, k):
        if not (is_kr_column(src) and is_kr_column(dst)):
            skipped += 1
            continue
        got = e_op(0, src)
        if got != dst:
            return _report("zero_chains", params, started, False,
                           f"{name}: raising {src} gave {got}, expected {dst}")
        if second and e_op(0, dst) is None:
            return _report("zero_chains", params, started, False,
                           f"{name}: second raising of {dst} unexpectedly vanishes")
        checked += 1
    details = f"{checked} chain cases verified"
    if skipped:
        details += f", {skipped} non-constructible parameter tuples skipped"
    return _report("zero_chains", params, started, True, details)


def check_filling_equivariance(n: int, k: int) -> VerificationReport:
    """Filling to height k commutes with every classical lowering
    operator, and dropping inverts filling."""
    started = time.perf_counter()
    params = {"n": n, "k": k}
    count = 0
    for l in range(k % 2, k + 1, 2):
        if l == 0:
            cols = [Column(n, ())]
        else:
            cols = enumerate_columns(n, l, kn_only=True)
        for b in cols:
            filled = fill(b, k)
            if drop(filled) != b:
                return _report("filling_equivariance", params, started, False,
                               f"dropping does not invert filling at {b}")
            for i in range(1, n + 1):
                lowered = act_f(i, b) if l else None
                both_null = lowered is None
                image = act_f(i, filled)
                if both_null != (image is None):
                    return _report(
                        "filling_equivariance", params, started, False,
                        f"label {i} kills exactly one side at {b}")
                if not both_null and fill(lowered, k) != image:
                    return _report(
                        "filling_equivariance", params, started, False,
                        f"label {i} does not commute with filling at {b}")
            count += 1
    return _report("filling_equivariance", params, started, True,
                   f"{count} classical columns checked")


def classical_neighbor_sizes(n: int, k: int) -> list[int]:
    """Crystal sizes of the fundamental crystals at the classical Dynkin
    neighbors of node k; the two spin crystals have size 2^(n-1)."""
    if k == n - 2:
        neighbors = [n - 3, n - 1, n] if n > 4 else [1, 3, 4]
    else:
        neighbors = [j for j in (k - 1, k + 1) if j >= 1]
    sizes = []
    for j in neighbors:
        if j <= n - 2:
            sizes.append(len(enumerate_columns(n, j)))
        else:
            sizes.append(2 ** (n - 1))
    return sizes


def check_b1_decomposition(n: int, k: int) -> VerificationReport:
    """The generated subset of the tensor square decomposes into the
    pairwise sums of fundamental weights, and its complement has the
    cardinality of the product of the neighboring fundamental crystals."""
    started = time.perf_counter()
    params = {"n": n, "k": k}
    b1 = generate_Ba(n, k, 1)
    found = graphmod.decompose(b1)
    kp = k // 2
    expected: Counter = Counter()
    for m1 in range(kp + 1):
        for m2 in range(m1, kp + 1):
            w = Weight.zero(n)
            for m in (m1, m2):
                idx = k - 2 * m
                if idx >= 1:
                    w = w + fundamental(n, idx)
            expected[w] += 1
    if found != expected:
        return _report("b1_decomposition", params, started, False,
                       f"found {dict(found)} expected {dict(expected)}")
    total = len(enumerate_columns(n, k)) ** 2
    complement = total - len(b1)
    product = 1
    for s in classical_neighbor_sizes(n, k):
        product *= s
    if complement != product:
        return _report("b1_decomposition", params, started, False,
                       f"complement {complement} != neighbor product {product}")
    return _report("b1_decomposition", params, started, True,
                   f"|B1| = {len(b1)}, complement {complement} matches")


def _component_character(n: int, lam_coeffs: list[tuple[int, int]],
                         node_budget: int) -> graphmod.Character:
    """Character of the classical component with highest weight given as
    [(fundamental index, multiplicity)], generated inside a tensor of
    classical column crystals."""
    factors = []
    for idx, mult in lam_coeffs:
        for _ in range(mult):
            factors.append(Column(n, tuple(range(1, idx + 1))))
    if not factors:
        factors = [Column(n, ())]
    seed = TensorElt(tuple(factors))
    comp = graphmod.component(seed, node_budget)
    return graphmod.character(comp)


def check_restricted_character(n: int, k: int, l: int,
                               node_budget: int = graphmod.DEFAULT_NODE_BUDGET) -> VerificationReport:
    """Character of the adjacency-restricted paths equals the sum of the
    characters of the classical components indexed by nonincreasing
    sequences."""
    started = time.perf_counter()
    params = {"n": n, "k": k, "l": l}
    kp = k // 2
    paths = restricted_paths(n, k, l)
    lhs = graphmod.character(paths)
    rhs = None
    for c in itertools.product(range(l, -1, -1), repeat=kp):
        if any(a < b for a, b in zip(c, c[1:])) or (kp and c[0] > l):
            continue
        full = (l,) + c + (0,)
        coeffs = [(k - 2 * j, full[j] - full[j + 1])
                  for j in range(kp + 1)
                  if full[j] - full[j + 1] and k - 2 * j >= 1]
        ch = _component_character(n, coeffs, node_budget)
        rhs = ch if rhs is None else rhs + ch
    if rhs is not None and graphmod.characters_equal(lhs, rhs):
        return _report("restricted_character", params, started, True,
                       f"characters agree with mass {lhs.mass()}")
    return _report("restricted_character", params, started, False,
                   f"path mass {lhs.mass()} vs component mass "
                   f"{rhs.mass() if rhs else 0}")


# ---------------------------------------------------------------------------
# prepolarization norms


def _signed_q_int(m: int) -> LaurentPoly:
    return q_int(m) if m >= 0 else -q_int(-m)


def _q_binomial_or_zero(l: int, m: int) -> LaurentPoly:
    if m < 0 or m > l:
        return zero()
    return q_binomial(l, m)


def norm_u(n: int, k: int, l: int, c: Sequence[int]) -> LaurentPoly:
    """Squared norm of the component vector indexed by c: the product of
    q^(c_j (2l - c_j)) times the Gaussian binomial (2l choose c_j)."""
    validate_c(n, k, l, c)
    out = one()
    for cj in c:
        out = out * q_power(cj * (2 * l - cj)) * q_binomial(2 * l, cj)
    return out


def norm_eu(n: int, k: int, l: int, c: Sequence[int], j: int) -> LaurentPoly:
    """Squared norm of the raised component vector for a classical label.

    Zero unless k - j is an even nonnegative integer. Otherwise assembled
    from the lowered-vector recursion: with p = (k - j)/2 + 1 and
    beta = c_p - c_{p-1} (conventions c_0 = l, c_{k'+1} = 0),

        |e_j u|^2 = q^(2 beta) |f_j u|^2 + q^(beta - 1) [beta] |u|^2.

    For p <= k' this equals the closed-form product of norm_eu_display.
    """
    validate_c(n, k, l, c)
    if not 1 <= j <= n:
        raise ValueError(f"label must lie in 1..{n}, got {j}")
    if j > k or (k - j) % 2:
        return zero()
    kp = k // 2
    p = (k - j) // 2 + 1
    full = [l] + list(c) + [0]
    beta = full[p] - full[p - 1]
    # |u_{p-1}|^2, then the endpoint factor, then the recursion back up
    fj2 = one()
    for m in range(1, p):
        fj2 = fj2 * q_power(full[m] * (2 * l - full[m])) * q_binomial(2 * l, full[m])
    cp, cpm1 = full[p], full[p - 1]
    fj2 = fj2 * q_power(cp * (2 * l - 1 - cp)) * _q_binomial_or_zero(2 * l - 1, cp)
    fj2 = fj2 * q_power(cpm1 - 1) * q_int(cpm1)
    for m in range(p + 1, kp + 1):
        fj2 = fj2 * q_power(full[m] * (2 * l - full[m])) * q_binomial(2 * l, full[m])
    return q_power(2 * beta) * fj2 + q_power(beta - 1) * _signed_q_int(beta) * norm_u(n, k, l, c)


def norm_eu_display(n: int, k: int, l: int, c: Sequence[int], j: int) -> LaurentPoly:
    """The closed-form product for the raised-vector norm, valid for
    labels with (k - j)/2 < k'. Out-of-range binomials are zero."""
    validate_c(n, k, l, c)
    if j > k or (k - j) % 2:
        return zero()
    kp = k // 2
    p = (k - j) // 2 + 1
    full = [l] + list(c) + [0]
    cpm1 = full[p - 1]
    out = q_power(2 * l - cpm1 - 1) * q_int(2 * l - cpm1)
    for i in range(1, kp + 1):
        d = 1 if i == p else 0
        out = out * q_power((full[i] - d) * (2 * l - full[i]))
        out = out * _q_binomial_or_zero(2 * l - d, full[i] - d)
    return out


def _all_c(k: int, l: int):
    kp = k // 2
    for c in itertools.product(range(l, -1, -1), repeat=kp):
        if all(a >= b for a, b in zip(c, c[1:])):
            yield c


def check_norm_conditions(n: int, k: int, l: int) -> VerificationReport:
    """q-adic bounds for the closed-form norms over every index sequence,
    plus agreement of the assembled and closed-form raised norms."""
    started = time.perf_counter()
    params = {"n": n, "k": k, "l": l}
    kp = k // 2
    weights: dict[tuple, Weight] = {}
    for c in _all_c(k, l):
        u2 = norm_u(n, k, l, c)
        if not in_c_plus_qA(u2, 1):
            return _report("norm_conditions", params, started, False,
                           f"|u|^2 not in 1 + qA at c={c}: {u2}")
        import math

        expected = 1
        for cj in c:
            expected *= math.comb(2 * l, cj)
        if u2.evaluate_at_one() != expected:
            return _report("norm_conditions", params, started, False,
                           f"|u|^2 at q=1 mismatch at c={c}")
        lam = lambda_of_c(n, k, l, c)
        weights[c] = lam
        for j in range(1, n + 1):
            v = norm_eu(n, k, l, c, j)
            if not in_qn_A(v, -1 - 2 * pairing_h(lam, j)):
                return _report("norm_conditions", params, started, False,
                               f"|e_j u|^2 bound fails at c={c} j={j}: {v}")
            if j <= k and (k - j) % 2 == 0 and (k - j) // 2 + 1 <= kp:
                if v != norm_eu_display(n, k, l, c, j):
                    return _report("norm_conditions", params, started, False,
                                   f"assembled and closed-form norms differ at c={c} j={j}")
    items = list(weights.items())
    for (c1, w1), (c2, w2) in itertools.combinations(items, 2):
        if w1 == w2:
            return _report("norm_conditions", params, started, False,
                           f"distinct indices {c1}, {c2} share the weight {w1}")
    return _report("norm_conditions", params, started, True,
                   f"{len(items)} index sequences checked")


# ---------------------------------------------------------------------------
# the whole grid


def run_all(n_max: int, k_max: int, l_max: int,
            node_budget: int = graphmod.DEFAULT_NODE_BUDGET) -> list[VerificationReport]:
    """Run every check over the parameter grid; resource blowups are
    reported per check instead of aborting the suite."""
    reports: list[VerificationReport] = []

    def guarded(fn, *args, **kwargs):
        try:
            reports.append(fn(*args, **kwargs))
        except graphmod.NodeBudgetExceeded as exc:
            reports.append(VerificationReport(
                fn.__name__.removeprefix("check_"),
                {"args": args}, False, f"resource error: {exc}", 0.0))

    for n in range(4, n_max + 1):
        for k in range(1, min(k_max, n - 2) + 1):
            guarded(check_fundamental_decomposition, n, k)
            guarded(check_zero_action, n, k)
            guarded(check_filling_equivariance, n, k)
            if k >= 2:
                guarded(check_e0_chains, n, k)
                guarded(check_b1_decomposition, n, k)
                for l in range(2, l_max + 1):
                    guarded(check_restricted_character, n, k, l,
                            node_budget=node_budget)
                for l in range(1, l_max + 1):
                    guarded(check_norm_conditions, n, k, l)
    return reports


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.as_json() for r in reports], indent=2) + "\n"
