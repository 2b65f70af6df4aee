"""Exact quantum-group link invariants.

Polynomials are Laurent polynomials in v = q^(1/2) (or in the bracket
variable x) with Gaussian-rational coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from . import _qlink
from ._qlink import InternalError, UsageError

__all__ = [
    "Polynomial",
    "InternalError",
    "UsageError",
    "rt_invariant",
    "kauffman_bracket",
    "cs_invariant",
    "r_matrix",
    "verify_aw",
    "run_cli",
]


def _big(x) -> int:
    return int(x)  # big integers arrive as decimal strings


@dataclass(frozen=True)
class Polynomial:
    variable: str
    terms: Dict[int, Tuple[Fraction, Fraction]]
    text: str

    @classmethod
    def from_json(cls, doc) -> "Polynomial":
        terms = {}
        for exp, rn, rd, im_n, im_d in doc["value"]:
            terms[exp] = (Fraction(_big(rn), _big(rd)), Fraction(_big(im_n), _big(im_d)))
        return cls(doc["variable"], terms, doc["text"])

    def is_real(self) -> bool:
        return all(im == 0 for _, im in self.terms.values())

    def __str__(self) -> str:
        return self.text


def _poly(raw: str) -> Polynomial:
    return Polynomial.from_json(json.loads(raw))


def rt_invariant(braid: str, colors: Optional[Sequence[str]] = None, ambient: bool = False) -> Polynomial:
    return _poly(_qlink.rt_invariant(braid, list(colors) if colors is not None else None, ambient))


def kauffman_bracket(braid: str) -> Polynomial:
    return _poly(_qlink.kauffman_bracket(braid))


def cs_invariant(braid: str) -> Polynomial:
    return _poly(_qlink.cs_invariant(braid))


def r_matrix(j1: str, j2: str, variant: str = "plain") -> dict:
    return json.loads(_qlink.r_matrix(j1, j2, variant))


def verify_aw(spins: str, suite: str = "all") -> dict:
    return json.loads(_qlink.verify_aw(spins, suite))


def run_cli(args: Sequence[str]) -> Tuple[int, str, str]:
    return _qlink.run_cli(list(args))
