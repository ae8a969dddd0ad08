"""Blakley (t, n) threshold secret sharing over GF(p).

Each share i is an affine hyperplane

    x_t = a_i1 x_1 + ... + a_i,t-1 x_t-1 + c_i   (mod p)

through a common point Q, and the secret is the first coordinate of Q.
Any t admissible shares pin Q down as the unique solution of a linear
system; fewer than t leave x_1 completely undetermined.
"""

import itertools
from dataclasses import dataclass

from .errors import (
    AdmissibilityExhaustedError,
    InvalidParamsError,
    MixedParamsError,
    SingularMatrixError,
    SingularSharesError,
    WrongShareCountError,
)
from .field import PrimeModulus, RandomSource, sample_uniform
from .modlinalg import ModMatrix, ModVector, determinant, in_rowspace, solve

# Subset checks in admissible() cost C(n, t) determinants, so n is capped.
MAX_SHARES = 64

DEFAULT_MAX_ATTEMPTS = 1024


@dataclass(frozen=True)
class SchemeParams:
    """The (p, t, n) configuration shared by every share of one secret.

    threshold 1 is allowed only so degenerate configurations can be
    described for threshold accounting; split() itself needs t >= 2.
    """

    modulus: PrimeModulus
    threshold: int
    total: int

    def __post_init__(self):
        if not 1 <= self.threshold <= self.total <= MAX_SHARES:
            raise InvalidParamsError(
                f"need 1 <= t <= n <= {MAX_SHARES}, got t={self.threshold}, n={self.total}"
            )


@dataclass(frozen=True)
class SecretPoint:
    """The common intersection point Q; coords[0] is the secret."""

    coords: tuple
    params: SchemeParams

    def __post_init__(self):
        p = self.params.modulus.p
        object.__setattr__(self, "coords", tuple(v % p for v in self.coords))
        if len(self.coords) != self.params.threshold:
            raise InvalidParamsError(
                f"point needs {self.params.threshold} coordinates, got {len(self.coords)}"
            )

    @property
    def secret(self) -> int:
        return self.coords[0]


@dataclass(frozen=True)
class Share:
    """One hyperplane: t-1 coefficients and a constant term."""

    index: int
    coeffs: tuple
    constant: int
    params: SchemeParams

    def __post_init__(self):
        p = self.params.modulus.p
        object.__setattr__(self, "coeffs", tuple(v % p for v in self.coeffs))
        object.__setattr__(self, "constant", self.constant % p)
        if self.params.threshold < 2:
            raise InvalidParamsError("shares exist only for threshold >= 2")
        if not 1 <= self.index <= self.params.total:
            raise InvalidParamsError(
                f"share index {self.index} outside 1..{self.params.total}"
            )
        if len(self.coeffs) != self.params.threshold - 1:
            raise InvalidParamsError(
                f"expected {self.params.threshold - 1} coefficients, got {len(self.coeffs)}"
            )


def _shared_params(shares) -> SchemeParams:
    if not shares:
        raise WrongShareCountError("at least one share is required")
    params = shares[0].params
    for s in shares[1:]:
        if s.params != params:
            raise MixedParamsError(
                f"share {s.index} has different parameters than share {shares[0].index}"
            )
    return params


def _require_distinct_indices(shares):
    seen = set()
    for s in shares:
        if s.index in seen:
            raise WrongShareCountError(f"duplicate share index {s.index}")
        seen.add(s.index)


def _normal_rows(shares, p: int) -> list:
    # Row form of "sum a_j x_j - x_t = -c": coefficients then -1.
    return [list(s.coeffs) + [p - 1] for s in shares]


def admissible(shares) -> bool:
    """Whether a share set is safe to hand out.

    True iff (a) every t-subset forms a nonsingular system, so any t
    shareholders can reconstruct, and (b) no subset of fewer than t
    shares determines x_1, i.e. the unit vector e_1 stays outside every
    sub-threshold row space. Accepts any distinct-index collection with
    common params, not just a full dealer output.
    """
    params = _shared_params(shares)
    _require_distinct_indices(shares)
    modulus = params.modulus
    t = params.threshold
    rows = _normal_rows(shares, modulus.p)
    for sub in itertools.combinations(rows, t):
        if determinant(ModMatrix(sub, modulus)) == 0:
            return False
    e1 = ModVector([1] + [0] * (t - 1), modulus)
    # A leaking k-subset keeps leaking inside every superset, so checking
    # size t-1 covers all k < t.
    for sub in itertools.combinations(rows, t - 1):
        if sub and in_rowspace(e1, ModMatrix(sub, modulus)):
            return False
    return True


def split(secret: int, params: SchemeParams, rng: RandomSource,
          max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> list:
    """Split a secret into n hyperplane shares.

    Draws the remaining coordinates of Q and all plane coefficients
    uniformly, then solves each constant so the plane passes through Q.
    The whole set is redrawn until admissible() accepts it.

    Args:
        secret: value in [0, p) to protect.
        params: scheme configuration with threshold >= 2.
        rng: randomness source; seed it for reproducible shares.
        max_attempts: rejection-loop cap before giving up.

    Raises:
        InvalidParamsError: secret out of range or threshold < 2.
        AdmissibilityExhaustedError: cap reached, meaning p is too small
            for this (t, n) to pass the subset checks by chance.
    """
    if params.threshold < 2:
        raise InvalidParamsError("splitting needs threshold >= 2")
    modulus = params.modulus
    p = modulus.p
    if not 0 <= secret < p:
        raise InvalidParamsError(f"secret must lie in [0, {p})")
    if max_attempts < 1:
        raise InvalidParamsError("max_attempts must be positive")
    t, n = params.threshold, params.total
    for _ in range(max_attempts):
        coords = [secret] + [sample_uniform(rng, modulus).value for _ in range(t - 1)]
        shares = []
        for i in range(1, n + 1):
            coeffs = tuple(sample_uniform(rng, modulus).value for _ in range(t - 1))
            c = (coords[-1] - sum(a * x for a, x in zip(coeffs, coords))) % p
            shares.append(Share(i, coeffs, c, params))
        if admissible(shares):
            return shares
    raise AdmissibilityExhaustedError(
        f"no admissible share set in {max_attempts} attempts for p={p}, t={t}, n={n}"
    )


def verify_share(share: Share, point: SecretPoint) -> bool:
    """Whether the share's hyperplane passes through the point."""
    if share.params != point.params:
        raise MixedParamsError("share and point use different parameters")
    p = share.params.modulus.p
    rhs = (sum(a * x for a, x in zip(share.coeffs, point.coords)) + share.constant) % p
    return point.coords[-1] == rhs


def reconstruct_point(shares) -> SecretPoint:
    """Solve t shares for the full intersection point Q.

    Raises:
        WrongShareCountError: not exactly t distinct-index shares.
        MixedParamsError: shares from different configurations.
        SingularSharesError: the t planes do not meet in a unique point.
    """
    params = _shared_params(shares)
    if len(shares) != params.threshold:
        raise WrongShareCountError(
            f"need exactly {params.threshold} shares, got {len(shares)}"
        )
    _require_distinct_indices(shares)
    modulus = params.modulus
    p = modulus.p
    a = ModMatrix(_normal_rows(shares, p), modulus)
    b = ModVector([-s.constant for s in shares], modulus)
    try:
        x = solve(a, b)
    except SingularMatrixError as e:
        raise SingularSharesError(
            "shares are inconsistent or not admissible (singular system)"
        ) from e
    return SecretPoint(x.entries, params)


def reconstruct(shares) -> int:
    """Recover the secret (first coordinate of Q) from exactly t shares."""
    return reconstruct_point(shares).secret
