"""JSON encoding/decoding for the public object types.

All rationals travel as strings ("29/18") so nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction

from .branch import BranchParametrization
from .errors import ValidationError
from .forms import OneForm
from .poly import Poly
from .valueset import ValueSet

COORD_NAMES = ("x", "y", "z", "w")


def frac_to_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def frac_from_str(s):
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad rational {s!r}") from exc


# -- branches --------------------------------------------------------------


def branch_to_json(phi):
    def coord(terms):
        return [[e, frac_to_str(c)] for e, c in terms]

    x = phi.coords[0]
    if len(x) != 1 or x[0][1] != 1:
        raise ValidationError("branch JSON requires x(t) = t^n")
    out = {"n": x[0][0], "y": coord(phi.coords[1] if phi.ncoords > 1 else ())}
    if phi.ncoords > 2:
        out["extra"] = [coord(c) for c in phi.coords[2:]]
    return out


def branch_from_json(obj):
    try:
        n = int(obj["n"])
        y = {int(e): frac_from_str(c) for e, c in obj.get("y", [])}
        extra = [{int(e): frac_from_str(c) for e, c in coord}
                 for coord in obj.get("extra", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad branch JSON: {exc}") from exc
    return BranchParametrization.plane(n, y, extra)


# -- 1-forms -----------------------------------------------------------------


def _poly_to_json(p):
    out = []
    for e in sorted(p.terms):
        out.append(list(e) + [frac_to_str(p.terms[e])])
    return out


def _poly_from_json(items, nvars):
    terms = {}
    for item in items:
        if len(item) != nvars + 1:
            raise ValidationError(
                f"polynomial term {item!r} needs {nvars} exponents and a coefficient")
        exps = tuple(int(v) for v in item[:-1])
        terms[exps] = terms.get(exps, 0) + frac_from_str(item[-1])
    return Poly(nvars, terms)


def form_to_json(form):
    return {"d": [[COORD_NAMES[i], _poly_to_json(a)]
                  for i, a in enumerate(form.coeffs)]}


def form_from_json(obj):
    try:
        entries = obj["d"]
        names = [name for name, _ in entries]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad 1-form JSON: {exc}") from exc
    if names != list(COORD_NAMES[: len(names)]):
        raise ValidationError(
            f"1-form coordinates must be {COORD_NAMES[:len(names)]} in order, got {names}")
    nvars = len(names)
    coeffs = tuple(_poly_from_json(items, nvars) for _, items in entries)
    return OneForm(coeffs)


# -- value sets ----------------------------------------------------------------


def valueset_to_json(s):
    return s.to_json()


def valueset_from_json(obj):
    return ValueSet.from_json(obj)


# -- stratification reports ------------------------------------------------------


def stratum_to_json(stratum):
    out = {
        "constraints": {
            "eq": [str(f) for f in stratum.equalities],
            "neq": [str(f) for f in stratum.nonzero],
        },
        "status": stratum.status,
        "lambda": stratum.lambda_set.to_json() if stratum.lambda_set else None,
        "witness": ({k: frac_to_str(v) for k, v in sorted(stratum.witness.items())}
                    if stratum.witness else None),
    }
    if stratum.minimal_values:
        out["minimal_values"] = list(stratum.minimal_values)
    return out


def report_to_json(report):
    return [stratum_to_json(s) for s in report.strata]


# -- decisions ----------------------------------------------------------------------


def decision_to_json(decision):
    out = {
        "verdict": decision.verdict,
        "stage": decision.stage,
        "evidence": decision.evidence,
    }
    if decision.witness is not None:
        out["witness"] = branch_to_json(decision.witness)
    if decision.gamma is not None:
        out["gamma"] = list(decision.gamma.generators)
    return out
