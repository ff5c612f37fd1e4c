"""Exact Bernoulli numbers under the convention B_1 = -1/2.

Two independent O(n^2) algorithms are provided.  The default is the
integer-only Seidel/tangent-number recurrence, which needs no intermediate
rational reduction; the rational Akiyama-Tanigawa recurrence exists as a
genuinely different code path whose agreement with the default is a strong
cross-check.  Tables carry their convention and provenance explicitly, can
be persisted to a line-based text cache, and are revalidated against all
structural invariants (sign pattern, von Staudt-Clausen denominator law)
whenever they are built or loaded.
"""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .exact_core import _allow_big_decimal_io, is_probable_prime

__all__ = [
    "ALGORITHMS",
    "BernoulliTable",
    "CONVENTION",
    "CacheError",
    "CacheFormatError",
    "CacheMissingError",
    "CacheVersionError",
    "CapacityError",
    "TableInvariantError",
    "bernoulli_table",
    "load_table",
    "persist_table",
    "tangent_numbers",
    "von_staudt_clausen_denominator",
    "von_staudt_clausen_primes",
]

# Fixed by the generating function z/(e^z - 1); the other common convention
# flips the sign of B_1, so the marker is recorded everywhere a table goes.
CONVENTION = "minus-half"

ALGORITHMS = ("seidel", "akiyama-tanigawa", "cache")

_HEADER_MAGIC = "BERN"
_HEADER_VERSION = "v1"


class CapacityError(ValueError):
    """A table is too small for the request, or a build exceeds resources."""


class CacheError(Exception):
    """Base class for table cache failures."""


class CacheMissingError(CacheError):
    """Cache file does not exist."""


class CacheFormatError(CacheError):
    """Cache file is malformed (bad header, bad line, duplicates, empty)."""


class CacheVersionError(CacheError):
    """Cache file declares an unsupported format version."""


class TableInvariantError(CacheError):
    """Table values violate a structural invariant."""


def tangent_numbers(count: int) -> list[int]:
    """First `count` tangent numbers T_1, T_2, ... (1, 2, 16, 272, ...).

    In-place Seidel/boustrophedon recurrence; integers throughout.
    """
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    t = [0] * (count + 1)
    if count >= 1:
        t[1] = 1
    for k in range(2, count + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, count + 1):
        for j in range(k, count + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    return t[1:]


def _seidel_values(max_index: int) -> list[Fraction]:
    # B_{2k} = (-1)^(k-1) * 2k * T_k / (4^k (4^k - 1)); conversion from the
    # integer tangent numbers happens only here, at the very end.
    values = [Fraction(0)] * (max_index + 1)
    values[0] = Fraction(1)
    if max_index >= 1:
        values[1] = Fraction(-1, 2)
    tang = tangent_numbers(max_index // 2)
    for k in range(1, max_index // 2 + 1):
        four_k = 1 << (2 * k)
        sign = 1 if k % 2 == 1 else -1
        values[2 * k] = Fraction(sign * 2 * k * tang[k - 1], four_k * (four_k - 1))
    return values


def _akiyama_tanigawa_values(max_index: int) -> list[Fraction]:
    # The triangular recurrence yields the B_1 = +1/2 convention; even
    # indices agree between conventions, so only index 1 needs flipping.
    row = [Fraction(0)] * (max_index + 1)
    values: list[Fraction] = []
    for m in range(max_index + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        values.append(row[0])
    if max_index >= 1:
        values[1] = Fraction(-1, 2)
    return values


def von_staudt_clausen_primes(k: int) -> tuple[int, ...]:
    """Primes p with (p - 1) dividing 2k, via the divisors of 2k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    two_k = 2 * k
    divisors = set()
    d = 1
    while d * d <= two_k:
        if two_k % d == 0:
            divisors.add(d)
            divisors.add(two_k // d)
        d += 1
    return tuple(sorted(d + 1 for d in divisors if is_probable_prime(d + 1)))


def von_staudt_clausen_denominator(k: int) -> int:
    """denominator(B_2k) = product of primes p with (p - 1) | 2k."""
    return math.prod(von_staudt_clausen_primes(k))


@dataclass(frozen=True)
class BernoulliTable:
    """Immutable table of exact B_0 .. B_max_index with provenance.

    Construction validates every invariant, so a table object that exists is
    known-good regardless of where its values came from.
    """

    max_index: int
    values: tuple[Fraction, ...]
    algorithm: str
    convention: str = field(default=CONVENTION)

    def __post_init__(self) -> None:
        _validate_table(self)

    def bernoulli(self, n: int) -> Fraction:
        """B_n; raises CapacityError beyond the table."""
        if n < 0:
            raise ValueError(f"index must be nonnegative, got {n}")
        if n > self.max_index:
            raise CapacityError(
                f"table holds B_0..B_{self.max_index}, B_{n} requested"
            )
        return self.values[n]

    def even(self, k: int) -> Fraction:
        """B_{2k}."""
        return self.bernoulli(2 * k)


def _validate_table(table: BernoulliTable) -> None:
    if table.algorithm not in ALGORITHMS:
        raise TableInvariantError(f"unknown algorithm tag {table.algorithm!r}")
    if table.convention != CONVENTION:
        raise TableInvariantError(
            f"unsupported convention {table.convention!r}, expected {CONVENTION!r}"
        )
    if table.max_index < 0:
        raise TableInvariantError(f"negative max_index {table.max_index}")
    if len(table.values) != table.max_index + 1:
        raise TableInvariantError(
            f"expected {table.max_index + 1} values, found {len(table.values)}"
        )
    if table.values[0] != 1:
        raise TableInvariantError(f"B_0 must be 1, found {table.values[0]}")
    if table.max_index >= 1 and table.values[1] != Fraction(-1, 2):
        raise TableInvariantError(f"B_1 must be -1/2, found {table.values[1]}")
    for n in range(3, table.max_index + 1, 2):
        if table.values[n] != 0:
            raise TableInvariantError(f"B_{n} must be 0, found {table.values[n]}")
    for k in range(1, table.max_index // 2 + 1):
        b = table.values[2 * k]
        primes = von_staudt_clausen_primes(k)
        if b.denominator != math.prod(primes):
            raise TableInvariantError(
                f"denominator of B_{2 * k} violates the von Staudt-Clausen law: "
                f"found {b.denominator}, expected {math.prod(primes)}"
            )
        # Full von Staudt-Clausen: B_2k + sum of 1/p must be an integer.
        # Strictly stronger than the denominator law (catches numerator
        # corruption that happens to preserve the reduced denominator).
        if (b + sum(Fraction(1, p) for p in primes)).denominator != 1:
            raise TableInvariantError(
                f"B_{2 * k} + sum(1/p) is not an integer; numerator corrupt"
            )
        if (b > 0) != (k % 2 == 1) or b == 0:
            raise TableInvariantError(f"sign of B_{2 * k} is wrong: {b}")


def bernoulli_table(max_index: int, algorithm: str = "seidel") -> BernoulliTable:
    """Exact table of B_0..B_max_index.

    `seidel` runs the integer tangent-number recurrence and converts once at
    the end; `akiyama-tanigawa` runs the rational triangular recurrence.
    Both are quadratic in max_index.
    """
    if max_index < 0:
        raise ValueError(f"max_index must be nonnegative, got {max_index}")
    if algorithm == "seidel":
        build = _seidel_values
    elif algorithm == "akiyama-tanigawa":
        build = _akiyama_tanigawa_values
    else:
        raise ValueError(
            f"algorithm must be 'seidel' or 'akiyama-tanigawa', got {algorithm!r}"
        )
    try:
        values = build(max_index)
    except MemoryError as exc:
        raise CapacityError(f"table build for max_index={max_index} exhausted memory") from exc
    return BernoulliTable(max_index=max_index, values=tuple(values), algorithm=algorithm)


def _header_line(table: BernoulliTable) -> str:
    return (
        f"{_HEADER_MAGIC} {_HEADER_VERSION} convention={table.convention} "
        f"algorithm={table.algorithm} max={table.max_index}"
    )


def persist_table(table: BernoulliTable, location: str | os.PathLike) -> None:
    """Write the table to `location` atomically (temp file, then rename).

    Format: one header line, then `<n> <numerator>/<denominator>` per entry
    in decimal; odd zero entries above index 1 are omitted.
    """
    path = Path(location)
    _allow_big_decimal_io()
    lines = [_header_line(table)]
    for n in range(table.max_index + 1):
        if n >= 3 and n % 2 == 1:
            continue
        v = table.values[n]
        lines.append(f"{n} {v.numerator}/{v.denominator}")
    fd, tmp_name = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii") as handle:
            handle.write("\n".join(lines) + "\n")
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def _parse_header(line: str) -> tuple[str, str, int]:
    tokens = line.split()
    if len(tokens) != 5 or tokens[0] != _HEADER_MAGIC:
        raise CacheFormatError(f"bad cache header: {line!r}")
    if tokens[1] != _HEADER_VERSION:
        raise CacheVersionError(
            f"unsupported cache version {tokens[1]!r}, expected {_HEADER_VERSION!r}"
        )
    fields = {}
    for token in tokens[2:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise CacheFormatError(f"bad header field {token!r}")
        fields[key] = value
    if set(fields) != {"convention", "algorithm", "max"}:
        raise CacheFormatError(f"bad header fields in {line!r}")
    if fields["convention"] != CONVENTION:
        raise CacheFormatError(
            f"unsupported convention {fields['convention']!r} in cache header"
        )
    if fields["algorithm"] not in ALGORITHMS:
        raise CacheFormatError(f"unknown algorithm {fields['algorithm']!r} in cache header")
    try:
        max_index = int(fields["max"])
    except ValueError as exc:
        raise CacheFormatError(f"bad max field in {line!r}") from exc
    if max_index < 0:
        raise CacheFormatError(f"negative max in {line!r}")
    return fields["convention"], fields["algorithm"], max_index


def _parse_entry(line: str, max_index: int) -> tuple[int, Fraction]:
    tokens = line.split()
    if len(tokens) != 2:
        raise CacheFormatError(f"malformed cache line: {line!r}")
    num_str, sep, den_str = tokens[1].partition("/")
    if not sep:
        raise CacheFormatError(f"malformed value in cache line: {line!r}")
    _allow_big_decimal_io()
    try:
        n = int(tokens[0])
        num = int(num_str)
        den = int(den_str)
    except ValueError as exc:
        raise CacheFormatError(f"malformed cache line: {line!r}") from exc
    if n < 0 or n > max_index:
        raise CacheFormatError(f"index {n} outside table range 0..{max_index}")
    if den < 1:
        raise CacheFormatError(f"nonpositive denominator in cache line: {line!r}")
    return n, Fraction(num, den)


def load_table(location: str | os.PathLike) -> BernoulliTable:
    """Load a persisted table and revalidate every invariant.

    Cached big numbers are a silent-corruption risk, so nothing in the file
    is trusted: the loaded values must pass the same checks a freshly built
    table does (the von Staudt-Clausen law pins every denominator and the
    integrality check pins every numerator modulo its denominator's primes).
    """
    path = Path(location)
    if not path.exists():
        raise CacheMissingError(f"no cache file at {path}")
    text = path.read_text(encoding="ascii")
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise CacheFormatError(f"empty cache file at {path}")
    convention, algorithm, max_index = _parse_header(lines[0])
    values = [Fraction(0)] * (max_index + 1)
    seen: set[int] = set()
    for line in lines[1:]:
        n, value = _parse_entry(line, max_index)
        if n in seen:
            raise CacheFormatError(f"duplicate entry for index {n}")
        seen.add(n)
        values[n] = value
    return BernoulliTable(
        max_index=max_index,
        values=tuple(values),
        algorithm=algorithm,
        convention=convention,
    )
