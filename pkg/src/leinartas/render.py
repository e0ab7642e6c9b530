"""Rendering of decompositions, certificates and verification reports.

Three formats: plain text (one term per line), JSON (round-trippable
canonical polynomial strings) and LaTeX (fraction sums).  Output is a pure
function of the inputs, so identical calls yield byte-identical documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algdep import Annihilator
from .decompose import Decomposition, DecompositionTerm, VerificationReport
from .nullstellensatz import NullCertificate
from .polynomial import Polynomial

FORMATS = ("text", "json", "latex")


@dataclass(frozen=True)
class OutputDocument:
    format: str
    payload: str


def _term_text(term: DecompositionTerm, dec: Decomposition) -> str:
    num = str(term.numerator)
    if not term.denominator_part:
        return num
    if len(term.numerator) > 1:
        num = f"({num})"
    factors = []
    for i, b in term.denominator_part:
        f = str(dec.denominator.factors[i][0])
        if len(dec.denominator.factors[i][0]) > 1:
            f = f"({f})"
        factors.append(f"{f}^{b}")
    return f"{num} / [{' * '.join(factors)}]"


def _certificate_text(record) -> list[str]:
    if isinstance(record, NullCertificate):
        combo = " + ".join(
            f"({h}) * ({q})" for h, q in zip(record.cofactors, record.inputs)
        )
        return [f"cofactors: 1 = {combo}"]
    assert isinstance(record, Annihilator)
    inputs = ", ".join(str(q) for q in record.inputs)
    return [f"annihilator: {record.poly} = 0 at ({inputs})"]


def _report_lines(report: VerificationReport) -> list[str]:
    lines = [f"verification: {'PASS' if report.overall else 'FAIL'}"]
    lines.append(f"  recombines to the input: {'yes' if report.sum_ok else 'NO'}")
    for i, tc in enumerate(report.terms):
        lines.append(
            f"  term {i}: common zero {'yes' if tc.common_zero_ok else 'NO'}, "
            f"independent {'yes' if tc.independence_ok else 'NO'}, "
            f"size bound {'yes' if tc.size_ok else 'NO'}"
        )
    return lines


def _coeff_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def polynomial_latex(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    chunks = []
    for m, c in p.terms:
        factors = []
        for name, e in zip(p.context.names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{{{e}}}")
        mono = " ".join(factors)
        magnitude = abs(c)
        if not mono:
            body = _coeff_latex(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{_coeff_latex(magnitude)} {mono}"
        if not chunks:
            chunks.append(f"-{body}" if c < 0 else body)
        else:
            chunks.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(chunks)


def _term_latex(term: DecompositionTerm, dec: Decomposition) -> str:
    num = polynomial_latex(term.numerator)
    if not term.denominator_part:
        return num
    pieces = []
    for i, b in term.denominator_part:
        factor = dec.denominator.factors[i][0]
        f = polynomial_latex(factor)
        if len(factor) > 1:
            f = f"\\left({f}\\right)"
        pieces.append(f if b == 1 else f"{f}^{{{b}}}")
    return f"\\frac{{{num}}}{{{' '.join(pieces)}}}"


def _certificate_json(record) -> dict:
    if isinstance(record, NullCertificate):
        return {
            "type": "nullstellensatz",
            "inputs": [str(q) for q in record.inputs],
            "cofactors": [str(h) for h in record.cofactors],
        }
    assert isinstance(record, Annihilator)
    return {
        "type": "annihilator",
        "inputs": [str(q) for q in record.inputs],
        "variables": list(record.variables.names),
        "polynomial": str(record.poly),
    }


def render(
    dec: Decomposition,
    report: VerificationReport | None = None,
    fmt: str = "text",
    include_certificates: bool = False,
) -> OutputDocument:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "json":
        doc = {
            "variables": list(dec.original.context.names),
            "input": {
                "numerator": str(dec.original.numerator),
                "denominator": str(dec.original.denominator),
            },
            "terms": [
                {
                    "numerator": str(t.numerator),
                    "denominator": [
                        {
                            "factor": str(dec.denominator.factors[i][0]),
                            "exponent": b,
                        }
                        for i, b in t.denominator_part
                    ],
                }
                for t in dec.terms
            ],
        }
        if include_certificates:
            doc["certificates"] = [_certificate_json(r) for r in dec.log]
        if report is not None:
            doc["verification"] = {
                "sum_ok": report.sum_ok,
                "terms": [
                    {
                        "common_zero_ok": tc.common_zero_ok,
                        "independence_ok": tc.independence_ok,
                        "size_ok": tc.size_ok,
                    }
                    for tc in report.terms
                ],
                "overall": report.overall,
            }
        return OutputDocument("json", json.dumps(doc, indent=2))

    if fmt == "latex":
        if dec.terms:
            body = " + ".join(_term_latex(t, dec) for t in dec.terms)
        else:
            body = "0"
        lines = [body]
        if include_certificates and dec.log:
            lines.extend(f"% {line}" for r in dec.log for line in _certificate_text(r))
        if report is not None:
            lines.extend(f"% {line}" for line in _report_lines(report))
        return OutputDocument("latex", "\n".join(lines))

    lines = [f"input: {dec.original}"]
    if dec.terms:
        lines.extend(_term_text(t, dec) for t in dec.terms)
    else:
        lines.append("0")
    if include_certificates and dec.log:
        lines.append("certificates:")
        for r in dec.log:
            lines.extend(f"  {line}" for line in _certificate_text(r))
    if report is not None:
        lines.extend(_report_lines(report))
    return OutputDocument("text", "\n".join(lines))
