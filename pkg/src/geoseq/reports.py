"""Serialization of sequences and analysis results (bits, hex, CSV, JSON)."""
from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .correlation import CorrelationPrediction, CorrelationProfile

CSV_HEADER = ("tau", "value", "predicted", "branch")


def bits_text(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits) + "\n"


def pack_hex(bits: Sequence[int]) -> str:
    """8 bits per byte, bit i of the sequence in bit (i mod 8) of byte i // 8."""
    out = bytearray((len(bits) + 7) // 8)
    for i, b in enumerate(bits):
        if b:
            out[i // 8] |= 1 << (i % 8)
    return out.hex()


def unpack_hex(text: str, length: int) -> list[int]:
    data = bytes.fromhex(text.strip())
    return [(data[i // 8] >> (i % 8)) & 1 for i in range(length)]


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def correlation_csv(observed: CorrelationProfile, predicted: CorrelationPrediction) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for tau, (v, pv, lab) in enumerate(
        zip(observed.values, predicted.values, predicted.case_labels)
    ):
        w.writerow((tau, v, pv, lab))
    return buf.getvalue()


def correlation_json(params: dict, observed: CorrelationProfile,
                     predicted: CorrelationPrediction) -> str:
    return dump_json({
        "params": params,
        "observed": list(observed.values),
        "predicted": list(predicted.values),
        "branches": list(predicted.case_labels),
        "match": observed.values == predicted.values,
    })


def rows_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
