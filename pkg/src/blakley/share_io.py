"""The BLK1 one-line share record.

    BLK1 p=<dec> t=<dec> n=<dec> i=<dec> a=<dec>,...,<dec> c=<dec>

followed by a single linefeed. Fields appear in exactly this order,
separated by single spaces; the t-1 coefficients are comma-separated
with no spaces; every number is unsigned decimal with no leading zeros.
Decoding is strict enough that any accepted record re-encodes to the
identical bytes.
"""

import re

from .errors import (
    BadMagicError,
    MalformedFieldError,
    RangeViolationError,
)
from .field import PrimeModulus
from .scheme import MAX_SHARES, SchemeParams, Share

_MAGIC = "BLK1"
_DEC = r"(?:0|[1-9][0-9]*)"
_RECORD = re.compile(
    rf"{_MAGIC} p=({_DEC}) t=({_DEC}) n=({_DEC}) i=({_DEC})"
    rf" a=({_DEC}(?:,{_DEC})*) c=({_DEC})"
)


def encode_share(share: Share) -> str:
    """Render a share as its canonical BLK1 line, linefeed included."""
    params = share.params
    coeffs = ",".join(str(v) for v in share.coeffs)
    return (
        f"{_MAGIC} p={params.modulus.p} t={params.threshold} n={params.total}"
        f" i={share.index} a={coeffs} c={share.constant}\n"
    )


def decode_share(record: str) -> Share:
    """Parse one BLK1 line back into a Share.

    A single trailing linefeed is tolerated; everything else must match
    the grammar byte for byte. Checks run in a fixed order: magic, then
    grammar, then p primality, then coefficient arity, then ranges.

    Raises:
        BadMagicError: first token is not BLK1.
        MalformedFieldError: grammar violation or wrong coefficient count.
        NonPrimeModulusError: p is composite or below 2.
        RangeViolationError: t > n, i outside 1..n, n too large, value >= p,
            or p outside the supported width.
    """
    line = record[:-1] if record.endswith("\n") else record
    if line.split(" ", 1)[0] != _MAGIC:
        raise BadMagicError("record does not start with BLK1")
    m = _RECORD.fullmatch(line)
    if m is None:
        raise MalformedFieldError("record does not match the BLK1 grammar")
    p_raw, t, n, i = int(m[1]), int(m[2]), int(m[3]), int(m[4])
    coeffs = tuple(int(v) for v in m[5].split(","))
    c = int(m[6])
    try:
        modulus = PrimeModulus(p_raw)
    except ValueError:
        raise RangeViolationError(f"p={p_raw} is wider than the supported modulus")
    if len(coeffs) != t - 1:
        raise MalformedFieldError(
            f"t={t} requires {t - 1} coefficients, record carries {len(coeffs)}"
        )
    if not 1 <= t <= n:
        raise RangeViolationError(f"threshold t={t} outside 1..n={n}")
    if n > MAX_SHARES:
        raise RangeViolationError(f"n={n} exceeds the {MAX_SHARES} share cap")
    if not 1 <= i <= n:
        raise RangeViolationError(f"index i={i} outside 1..{n}")
    for v in (*coeffs, c):
        if v >= p_raw:
            raise RangeViolationError(f"value {v} is not reduced mod p={p_raw}")
    return Share(i, coeffs, c, SchemeParams(modulus, t, n))
