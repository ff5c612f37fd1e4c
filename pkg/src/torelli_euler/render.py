"""Deterministic text and JSON rendering of exact values and certificates.

Decimal display truncates toward zero and marks any discarded nonzero tail,
so printed digits are always correct leading digits of the exact value.
JSON carries all arbitrary-precision numbers as decimal strings; rationals
are {"num": ..., "den": ...} objects and certificates are tagged by "kind".
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .certify import (
    BoundSequence,
    Certificate,
    Inconclusive,
    IntegerValue,
    MagnitudeWitness,
    PrimeWitness,
)
from .exact_core import RationalInterval, _allow_big_decimal_io

__all__ = [
    "TRUNCATION_MARK",
    "certificate_from_json",
    "certificate_text",
    "certificate_to_json",
    "decimal_string",
    "dumps",
    "format_rational",
    "interval_to_json",
    "rational_from_json",
    "rational_to_json",
]

TRUNCATION_MARK = "…"


def decimal_string(q: Fraction, digits: int) -> str:
    """Decimal expansion of q with `digits` fractional digits, truncated toward zero."""
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    _allow_big_decimal_io()
    sign = "-" if q < 0 else ""
    magnitude = -q if q < 0 else q
    whole, remainder = divmod(magnitude.numerator, magnitude.denominator)
    fractional, tail = divmod(remainder * 10**digits, magnitude.denominator)
    text = f"{sign}{whole}.{str(fractional).zfill(digits)}"
    return text + TRUNCATION_MARK if tail else text


def format_rational(q: Fraction, digits: int = 12) -> str:
    """`num/den ≈ decimal` for proper fractions, plain digits for integers."""
    _allow_big_decimal_io()
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator} ≈ {decimal_string(q, digits)}"


def rational_to_json(q: Fraction) -> dict[str, str]:
    _allow_big_decimal_io()
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: Any) -> Fraction:
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise ValueError(f"not a rational object: {obj!r}")
    _allow_big_decimal_io()
    return Fraction(int(obj["num"]), int(obj["den"]))


def interval_to_json(interval: RationalInterval) -> dict[str, Any]:
    return {"lo": rational_to_json(interval.lo), "hi": rational_to_json(interval.hi)}


def bound_sequence_to_json(seq: BoundSequence) -> dict[str, Any]:
    return {
        "m": seq.m,
        "n": seq.n,
        "value": interval_to_json(seq.value),
        "ratio_next": interval_to_json(seq.ratio_next),
    }


def certificate_to_json(cert: Certificate) -> dict[str, Any]:
    _allow_big_decimal_io()
    if isinstance(cert, IntegerValue):
        return {"kind": "integer", "value": str(cert.value)}
    if isinstance(cert, PrimeWitness):
        return {
            "kind": "prime-witness",
            "value": rational_to_json(cert.value),
            "p": str(cert.p),
            "valuation": cert.valuation,
        }
    if isinstance(cert, MagnitudeWitness):
        return {
            "kind": "magnitude",
            "upper": rational_to_json(cert.upper),
            "statement": cert.statement,
        }
    if isinstance(cert, Inconclusive):
        return {"kind": "inconclusive", "reason": cert.reason}
    raise TypeError(f"not a certificate: {cert!r}")


def certificate_from_json(obj: Any) -> Certificate:
    """Rebuild a certificate; construction reruns its soundness checks."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"not a certificate object: {obj!r}")
    _allow_big_decimal_io()
    kind = obj["kind"]
    if kind == "integer":
        return IntegerValue(value=int(obj["value"]))
    if kind == "prime-witness":
        return PrimeWitness(
            value=rational_from_json(obj["value"]),
            p=int(obj["p"]),
            valuation=int(obj["valuation"]),
        )
    if kind == "magnitude":
        return MagnitudeWitness(
            upper=rational_from_json(obj["upper"]), statement=str(obj["statement"])
        )
    if kind == "inconclusive":
        return Inconclusive(reason=str(obj["reason"]))
    raise ValueError(f"unknown certificate kind {kind!r}")


def certificate_text(cert: Certificate, digits: int = 12) -> str:
    if isinstance(cert, IntegerValue):
        return f"integer: {cert.value}"
    if isinstance(cert, PrimeWitness):
        return (
            f"non-integer (prime witness): v_{cert.p} = {cert.valuation} "
            f"of {format_rational(cert.value, digits)}"
        )
    if isinstance(cert, MagnitudeWitness):
        return (
            f"non-integer (magnitude witness): {cert.statement}, "
            f"certified upper bound {decimal_string(cert.upper, digits)}"
        )
    if isinstance(cert, Inconclusive):
        return f"inconclusive: {cert.reason}"
    raise TypeError(f"not a certificate: {cert!r}")


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, UTF-8 text."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
