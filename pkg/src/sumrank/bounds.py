"""Closed-form bound evaluation and curve sampling.

Line coefficients and table quantities use exact integer/rational arithmetic;
the real-valued existence bounds use double precision with the q-series
constant truncated at a configurable tolerance.  Rates are returned raw
(possibly negative); clamping to [0, 1] is a presentation concern.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DistanceOutOfRange,
    DistanceTooSmall,
    DomainError,
    NotSquare,
    OddInnerDimension,
    ParamConstraintViolated,
    UnsortedProfile,
)
from .metrics import BlockProfile

BOUND_IDS = ("singleton_like", "gv_exact", "gv_asymptotic", "tvz_like_sr", "concat_line")


@dataclass(frozen=True)
class BoundCurve:
    """A sampled (delta, rate) relation for one bound at fixed parameters."""

    bound_id: str
    params: dict
    samples: tuple[tuple[float, float], ...]

    def __post_init__(self):
        deltas = [d for d, _ in self.samples]
        if any(b <= a for a, b in zip(deltas, deltas[1:])):
            raise ValueError("delta samples must be strictly increasing")
        if any(not math.isfinite(r) for _, r in self.samples):
            raise ValueError("all rates must be finite")

    def clamped(self) -> "BoundCurve":
        """Copy with rates clamped to [0, 1] for display."""
        return BoundCurve(
            self.bound_id,
            self.params,
            tuple((d, min(1.0, max(0.0, r))) for d, r in self.samples),
        )


@dataclass(frozen=True)
class LrsParams:
    """Parameter tuple of a linearized Reed-Solomon code (parameters only)."""

    q: int
    m: int
    t: int
    d: int

    def __post_init__(self):
        if self.t > self.q - 1:
            raise ParamConstraintViolated(
                f"block length t={self.t} exceeds q-1={self.q - 1}"
            )
        if not 0 < self.d <= self.m * self.t:
            raise ParamConstraintViolated(
                f"need 0 < d <= mt, got d={self.d}, mt={self.m * self.t}"
            )

    @property
    def k(self) -> int:
        return self.m * (self.m * self.t - self.d + 1)


def lrs_params(q: int, m: int, t: int, d: int) -> LrsParams:
    """Validated linearized Reed-Solomon parameters with k = m(mt - d + 1)."""
    return LrsParams(q, m, t, d)


def singleton_like_max_dim(profile: BlockProfile, q: int, d_sr: int) -> int:
    """log_q of the Singleton-like size bound for the given profile and distance.

    Writes d_sr = n_1 + ... + n_{j-1} + delta + 1 with 0 <= delta <= n_j - 1
    (unique) and returns sum_{i>=j} n_i m_i - m_j delta.  Requires the profile
    sorted with m_1 >= ... >= m_t.
    """
    ms = [m for _, m in profile.blocks]
    if any(a < b for a, b in zip(ms, ms[1:])):
        raise UnsortedProfile("profile must have m_1 >= ... >= m_t")
    if not 1 <= d_sr <= profile.total_rows:
        raise DistanceOutOfRange(
            f"need 1 <= d_sr <= {profile.total_rows}, got {d_sr}"
        )
    rem = d_sr - 1
    j = 0
    while rem > profile.blocks[j][0] - 1:
        rem -= profile.blocks[j][0]
        j += 1
    delta = rem
    tail = sum(n * m for n, m in profile.blocks[j:])
    return tail - profile.blocks[j][1] * delta


def gamma_q(q: int, tolerance: float = 2.0**-60) -> float:
    """The constant prod_{i>=1} (1 - q^-i)^-1, truncated adaptively.

    Stops once the log of the next factor drops below ``tolerance``.
    """
    if q < 2:
        raise DomainError(f"need q >= 2, got {q}")
    log_sum = 0.0
    i = 1
    while True:
        f = -math.log1p(-(q ** -i))
        log_sum += f
        if f < tolerance:
            return math.exp(log_sum)
        i += 1


def gv_exact_rate(q: int, n: int, m: int, t: int, d: int,
                  tolerance: float = 2.0**-60) -> float:
    """Finite-length Gilbert-Varshamov-like rate at integer distance d.

    Evaluates the exact sphere-counting expression for block length t and
    matrix size n x m (n <= m), with delta = d / (nt).  The result may be
    negative; callers clamp for display.

    Raises:
        DistanceTooSmall: if d <= 2 (the expression needs d > 2).
    """
    if n > m:
        raise DomainError(f"need n <= m, got n={n}, m={m}")
    N = n * t
    if d <= 2:
        raise DistanceTooSmall(f"need d > 2, got {d}")
    if d > N:
        raise DistanceOutOfRange(f"need d <= nt = {N}, got {d}")
    lq = math.log(q)
    delta = d / N
    s = sum(math.log1p((t - 1) / i) for i in range(1, d)) / lq
    return (
        delta * delta * (n / m)
        - delta * (1 + n / m + 2 * n / (N * m))
        + 1
        + 1 / N
        + n / (N * m)
        + n / (N * N * m)
        - (s + math.log(d - 1) / lq) / (N * m)
        - math.log(gamma_q(q, tolerance)) / lq / (n * m)
    )


def gv_asymptotic_rate(q: int, m: int, delta: float,
                       tolerance: float = 2.0**-60) -> float:
    """Asymptotic Gilbert-Varshamov-like rate (t to infinity, n = m)."""
    if not 0 < delta < 1:
        raise DomainError(f"need 0 < delta < 1, got {delta}")
    lq = math.log(q)
    return (
        (delta - 1) ** 2
        - (delta / m) * math.log1p(1 / (delta * m)) / lq
        - math.log1p(delta * m) / lq / (m * m)
        - math.log(gamma_q(q, tolerance)) / lq / (m * m)
    )


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            while n % f == 0:
                n //= f
            return n == 1
        f += 1
    return True  # n itself prime


def tvz_hamming_rhs(p: int, r: int) -> Fraction:
    """Right-hand side 1 - 1/(p^r - 1) of the Tsfasman-Vladut-Zink line."""
    if not _is_prime_power(p):
        raise DomainError(f"{p} is not a prime power")
    return 1 - Fraction(1, p**r - 1)


def tvz_like_sr_rate(p: int, m: int, delta: float) -> float:
    """Sum-rank TVZ-like rate 1 - delta - 2/(sqrt(p)-1) + 1/(m(sqrt(p)-1)).

    ``p`` must be the square of a prime power.  The value may be non-positive
    for small p (the bound is then vacuous); it is returned raw.
    """
    s = math.isqrt(p)
    if s * s != p or not _is_prime_power(s):
        raise NotSquare(f"{p} is not the square of a prime power")
    if not 0 <= delta < 1:
        raise DomainError(f"need 0 <= delta < 1, got {delta}")
    return 1 - delta - 2 / (s - 1) + 1 / (m * (s - 1))


def concat_line_rate(p: int, m: int, t: int, inner_dim_2r: int, inner_d: int,
                     delta: float) -> float:
    """Rate on the concatenated-code line, solved for R at the given delta.

    The line is (m^2 t / 2r) R + (mt / d) delta >= 1 - 1/(p^r - 1), with
    r = inner_dim_2r / 2.

    Raises:
        OddInnerDimension: the inner dimension must be even.
    """
    if inner_dim_2r < 2 or inner_dim_2r % 2:
        raise OddInnerDimension(
            f"inner dimension must be even and >= 2, got {inner_dim_2r}"
        )
    r = inner_dim_2r // 2
    c = float(tvz_hamming_rhs(p, r))
    return (2 * r / (m * m * t)) * (c - (m * t / inner_d) * delta)


def concat_presets(kind: str, p: int, m: int, t: int) -> tuple[Fraction, Fraction, Fraction]:
    """Exact line coefficients (a, b, c) with a*R + b*delta >= c.

    Kinds:
        d2:       inner code with minimum sum-rank distance 2,
                  r = m^2 (t-1) / 2 (must be an integer).
        lrs_half: linearized Reed-Solomon inner code with d = mt/2,
                  r = m^2 t / 4 + m / 2 (m even, t <= p-1).
        lrs_max:  linearized Reed-Solomon inner code with d = mt,
                  r = m / 2 (m even, t <= p-1).
    """
    if not _is_prime_power(p):
        raise ParamConstraintViolated(f"p={p} is not a prime power")
    if kind == "d2":
        if t < 2:
            raise ParamConstraintViolated(f"kind d2 needs t >= 2, got t={t}")
        if (m * m * (t - 1)) % 2:
            raise ParamConstraintViolated(
                f"kind d2 needs m^2(t-1) even, got m={m}, t={t}"
            )
        r = m * m * (t - 1) // 2
        a = Fraction(t, t - 1)
        b = Fraction(m * t, 2)
    elif kind == "lrs_half":
        _check_lrs(p, m, t)
        r = m * m * t // 4 + m // 2
        a = Fraction(2 * m * t, m * t + 2)
        b = Fraction(2)
    elif kind == "lrs_max":
        _check_lrs(p, m, t)
        r = m // 2
        a = Fraction(m * t)
        b = Fraction(1)
    else:
        raise ParamConstraintViolated(f"unknown preset kind {kind!r}")
    return a, b, tvz_hamming_rhs(p, r)


def _check_lrs(p: int, m: int, t: int):
    if m % 2:
        raise ParamConstraintViolated(f"preset needs m even, got m={m}")
    if t > p - 1:
        raise ParamConstraintViolated(f"preset needs t <= p-1, got t={t}, p={p}")
    if t < 1:
        raise ParamConstraintViolated(f"need t >= 1, got t={t}")


def line_rate(coeffs: tuple[Fraction, Fraction, Fraction], delta) -> Fraction:
    """Solve a*R + b*delta = c for R at the given delta, exactly."""
    a, b, c = coeffs
    return (c - b * Fraction(delta)) / a


def sample_curve(bound_id: str, params: dict, delta_grid) -> BoundCurve:
    """Evaluate the named bound on a strictly increasing grid in (0, 1).

    Raw (unclamped) rates are retained; use :meth:`BoundCurve.clamped` for
    display.  For ``gv_exact`` and ``singleton_like`` every delta must give an
    integer distance d = delta * N.
    """
    grid = [float(d) for d in delta_grid]
    if any(not 0 < d < 1 for d in grid):
        raise DomainError("grid values must lie in (0, 1)")
    samples = []
    for delta in grid:
        samples.append((delta, _eval_bound(bound_id, params, delta)))
    return BoundCurve(bound_id, dict(params), tuple(samples))


def _eval_bound(bound_id: str, params: dict, delta: float) -> float:
    if bound_id == "gv_asymptotic":
        return gv_asymptotic_rate(params["q"], params["m"], delta)
    if bound_id == "gv_exact":
        N = params["n"] * params["t"]
        d = delta * N
        if abs(d - round(d)) > 1e-9:
            raise DomainError(
                f"gv_exact needs integer distances; delta={delta} gives d={d}"
            )
        return gv_exact_rate(params["q"], params["n"], params["m"], params["t"], round(d))
    if bound_id == "tvz_like_sr":
        return tvz_like_sr_rate(params["p"], params["m"], delta)
    if bound_id == "concat_line":
        if "kind" in params:
            coeffs = concat_presets(params["kind"], params["p"], params["m"], params["t"])
            return float(line_rate(coeffs, Fraction(delta).limit_denominator(10**12)))
        return concat_line_rate(
            params["p"], params["m"], params["t"],
            params["inner_dim"], params["inner_d"], delta,
        )
    if bound_id == "singleton_like":
        profile = BlockProfile.uniform(params["n"], params["m"], params["t"])
        d = delta * profile.total_rows
        if abs(d - round(d)) > 1e-9:
            raise DomainError(
                f"singleton_like needs integer distances; delta={delta} gives d={d}"
            )
        dim = singleton_like_max_dim(profile, params["q"], round(d))
        return dim / profile.ambient_dim
    raise DomainError(f"unknown bound id {bound_id!r}")
