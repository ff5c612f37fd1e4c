import json
from fractions import Fraction

import pytest

from torelli_euler.certify import (
    Inconclusive,
    IntegerValue,
    MagnitudeWitness,
    PrimeWitness,
)
from torelli_euler.render import (
    certificate_from_json,
    certificate_text,
    certificate_to_json,
    decimal_string,
    dumps,
    format_rational,
    rational_from_json,
    rational_to_json,
)
from torelli_euler.verify import (
    CheckResult,
    VerificationReport,
    report_from_json,
    report_to_json,
)


def test_decimal_string_truncates_toward_zero_and_marks():
    assert decimal_string(Fraction(-1, 1440), 6) == "-0.000694…"
    assert decimal_string(Fraction(1, 8), 3) == "0.125"
    assert decimal_string(Fraction(1, 8), 6) == "0.125000"
    assert decimal_string(Fraction(2, 3), 4) == "0.6666…"
    assert decimal_string(Fraction(-2, 3), 4) == "-0.6666…"  # toward zero, not floor
    assert decimal_string(Fraction(5), 2) == "5.00"
    with pytest.raises(ValueError):
        decimal_string(Fraction(1, 3), 0)


def test_format_rational():
    assert format_rational(Fraction(12)) == "12"
    assert format_rational(Fraction(-1, 1440), 6) == "-1/1440 ≈ -0.000694…"


def test_rational_json_round_trip():
    for q in (Fraction(0), Fraction(-691, 2730), Fraction(10**40 + 1, 3)):
        assert rational_from_json(rational_to_json(q)) == q
    with pytest.raises(ValueError):
        rational_from_json({"num": "1"})


def _sample_certificates():
    return [
        IntegerValue(value=12),
        PrimeWitness(value=Fraction(1, 691), p=691, valuation=-1),
        MagnitudeWitness(upper=Fraction(1, 3), statement="0 < e(14,1) < 1"),
        Inconclusive(reason="bound not below 1"),
    ]


def test_certificate_json_round_trip():
    for cert in _sample_certificates():
        blob = dumps(certificate_to_json(cert))
        assert certificate_from_json(json.loads(blob)) == cert


def test_certificate_json_shapes():
    integer, witness, magnitude, inconclusive = map(
        certificate_to_json, _sample_certificates()
    )
    assert integer == {"kind": "integer", "value": "12"}
    assert witness["kind"] == "prime-witness"
    assert witness["p"] == "691" and witness["valuation"] == -1
    assert magnitude["kind"] == "magnitude"
    assert inconclusive == {"kind": "inconclusive", "reason": "bound not below 1"}


def test_certificate_json_rejects_unsound_witness():
    blob = certificate_to_json(_sample_certificates()[1])
    blob["valuation"] = -2
    with pytest.raises(Exception):
        certificate_from_json(blob)


def test_certificate_text_forms():
    texts = [certificate_text(cert) for cert in _sample_certificates()]
    assert texts[0] == "integer: 12"
    assert "v_691 = -1" in texts[1]
    assert "0 < e(14,1) < 1" in texts[2]
    assert texts[3].startswith("inconclusive")


def test_dumps_is_deterministic():
    cert = certificate_to_json(_sample_certificates()[1])
    assert dumps(cert) == dumps(json.loads(dumps(cert)))


def test_report_json_round_trip():
    report = VerificationReport(
        mode="standard",
        checks=(
            CheckResult(id="a", paper_ref="r1", status="pass", witness="w1"),
            CheckResult(id="b", paper_ref="r2", status="fail", witness="w2"),
            CheckResult(id="c", paper_ref="r3", status="inconclusive", witness="w3"),
        ),
    )
    blob = dumps(report_to_json(report))
    assert report_from_json(json.loads(blob)) == report
    assert report.summary == {"pass": 1, "fail": 1, "inconclusive": 1}
    assert not report.passed


def test_report_rejects_duplicate_ids_and_bad_summary():
    with pytest.raises(ValueError):
        VerificationReport(
            mode="standard",
            checks=(
                CheckResult(id="a", paper_ref="r", status="pass", witness="w"),
                CheckResult(id="a", paper_ref="r", status="pass", witness="w"),
            ),
        )
    report = VerificationReport(
        mode="standard",
        checks=(CheckResult(id="a", paper_ref="r", status="pass", witness="w"),),
    )
    blob = report_to_json(report)
    blob["summary"]["fail"] = 3
    with pytest.raises(ValueError):
        report_from_json(blob)
