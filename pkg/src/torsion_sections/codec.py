"""JSON codecs for cyclotomic numbers, divisors and function-group elements.

Encoders produce plain JSON-compatible structures; decoders validate their input
through pydantic schemas and raise ``CodecError`` on anything malformed.

Formats:

    CycloElem  {"order": N, "coeffs": ["a/b", ...]}, or "zeta_N^k", or a rational
               string/integer such as "3/2" or 2
    Divisor    {"m": m, "terms": [{"component": j, "coord": <CycloElem>, "mult": n}]}
    KElement   {"m": m, "funcs": [{"alpha": .., "ell": n, "zeros": [..], "poles": [..]}]}
"""

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError

from torsion_sections.arith import CycloElem, as_root_of_unity, root_of_unity
from torsion_sections.errors import CodecError
from torsion_sections.fiber import Divisor, FiberPoint, FiberShape
from torsion_sections.function_group import KElement, RationalFunc

_ZETA = re.compile(r"^zeta_(\d+)\^(-?\d+)$")


# ============================================================
# Input schemas
# ============================================================


class CycloElemIn(BaseModel):
    order: int = Field(gt=0)
    coeffs: list[str | int]

    model_config = {"frozen": True}


CycloValue = CycloElemIn | str | int


class _CycloHolder(BaseModel):
    value: CycloValue


class DivisorTermIn(BaseModel):
    component: int
    coord: CycloValue
    mult: int

    model_config = {"frozen": True}


class DivisorIn(BaseModel):
    m: int = Field(gt=0)
    terms: list[DivisorTermIn] = Field(default_factory=list)

    model_config = {"frozen": True}


class RationalFuncIn(BaseModel):
    alpha: CycloValue = 1
    ell: int = 0
    zeros: list[CycloValue] = Field(default_factory=list)
    poles: list[CycloValue] = Field(default_factory=list)

    model_config = {"frozen": True}


class KElementIn(BaseModel):
    m: int = Field(gt=0)
    funcs: list[RationalFuncIn]

    model_config = {"frozen": True}


# ============================================================
# CycloElem
# ============================================================


def encode_rational(value: Fraction) -> str:
    return str(value)


def encode_cyclo(x: CycloElem) -> dict[str, Any]:
    return {"order": x.order, "coeffs": [encode_rational(c) for c in x.coeffs]}


def encode_value(x: CycloElem) -> str | dict[str, Any]:
    """Rationals as "a/b", roots of unity as "zeta_N^k", anything else in full form."""
    value = x.as_fraction()
    if value is not None:
        return encode_rational(value)
    root = as_root_of_unity(x)
    if root is None:
        return encode_cyclo(x)
    return f"zeta_{root[0]}^{root[1]}"


def _parse_rational(text: str | int) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        msg = f"not a rational number: {text!r}"
        raise CodecError(msg) from exc


def _decode_value(value: CycloValue) -> CycloElem:
    if isinstance(value, CycloElemIn):
        return CycloElem.from_poly(value.order, [_parse_rational(c) for c in value.coeffs])
    if isinstance(value, str):
        match = _ZETA.match(value.strip())
        if match:
            return root_of_unity(int(match.group(1)), int(match.group(2)))
    return CycloElem.rational(_parse_rational(value))


def decode_cyclo(raw: Any) -> CycloElem:
    try:
        value = _CycloHolder.model_validate({"value": raw}).value
    except ValidationError as exc:
        msg = f"invalid cyclotomic number: {exc}"
        raise CodecError(msg) from exc
    return _decode_value(value)


# ============================================================
# Divisor
# ============================================================


def encode_divisor(d: Divisor) -> dict[str, Any]:
    return {
        "m": d.shape.m,
        "terms": [
            {"component": p.component, "coord": encode_value(p.coord), "mult": n}
            for p, n in d.sorted_items()
        ],
    }


def decode_divisor(raw: Any) -> Divisor:
    try:
        spec = DivisorIn.model_validate(raw)
    except ValidationError as exc:
        msg = f"invalid divisor: {exc}"
        raise CodecError(msg) from exc
    shape = FiberShape(spec.m)
    try:
        terms = [
            (FiberPoint(shape, t.component, _decode_value(t.coord)), t.mult) for t in spec.terms
        ]
    except ValueError as exc:
        msg = f"invalid divisor term: {exc}"
        raise CodecError(msg) from exc
    return Divisor(shape, terms)


def load_divisor(path: Path | str) -> Divisor:
    """Read a divisor JSON file.

    Raises:
        FileNotFoundError: If the file doesn't exist.
        CodecError: If the file is not valid divisor JSON.
    """
    text = Path(path).read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        msg = f"{path}: not valid JSON ({exc})"
        raise CodecError(msg) from exc
    return decode_divisor(raw)


# ============================================================
# KElement
# ============================================================


def encode_rational_func(g: RationalFunc) -> dict[str, Any]:
    return {
        "alpha": encode_value(g.alpha),
        "ell": g.ell,
        "zeros": [encode_value(z) for z in g.zeros],
        "poles": [encode_value(p) for p in g.poles],
    }


def encode_kelement(g: KElement) -> dict[str, Any]:
    return {"m": g.shape.m, "funcs": [encode_rational_func(f) for f in g.funcs]}


def decode_kelement(raw: Any) -> KElement:
    """Parse and validate a KElement; membership failures raise ``KConditionError``."""
    try:
        spec = KElementIn.model_validate(raw)
    except ValidationError as exc:
        msg = f"invalid function-group element: {exc}"
        raise CodecError(msg) from exc
    funcs = [
        RationalFunc.create(
            _decode_value(f.alpha),
            f.ell,
            [_decode_value(z) for z in f.zeros],
            [_decode_value(p) for p in f.poles],
        )
        for f in spec.funcs
    ]
    return KElement(FiberShape(spec.m), tuple(funcs))
