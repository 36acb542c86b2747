"""Parsing and serialisation: the canonical text syntax for forms and
towers, the composable JSON descriptors, and the versioned certificate and
report schemas.

Rationals appear in JSON as integers or as exact strings "n/d"; no value is
ever a float.  Serialisation builds dictionaries in a fixed key order, so
identical inputs produce byte-identical JSON.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import DomainError


class ParseError(DomainError):
    """Malformed descriptor or payload (maps to CLI exit status 1)."""
from .extensions import ExtensionTower, make_tower
from .forms import QForm, orth_sum, pfister, qform, scale, tensor
from .involutions import InvolutionAlgebra, QuaternionAlg, quaternion
from .localfields import LocalField, Place
from .similitude import HypCertificate, MultiplierResult, PipelineReport, PfisterDecomposition

CERTIFICATE_SCHEMA = "hyp-certificate/1"
REPORT_SCHEMA = "pipeline-report/1"


# ----------------------------------------------------------------------
# Rationals.


def parse_rat(obj) -> Fraction:
    if isinstance(obj, bool):
        raise ParseError(f"not a rational: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {obj!r}") from exc
    raise ParseError(f"not a rational: {obj!r}")


def dump_rat(q) -> int | str:
    q = Fraction(q)
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ----------------------------------------------------------------------
# Forms: text and JSON.


def parse_form_text(text: str) -> QForm:
    """`<a1,a2,...>` for diagonal forms, `<<a1,...,an>>` for Pfister forms."""
    t = text.strip()
    if t.startswith("<<") and t.endswith(">>"):
        return pfister([int(x) for x in t[2:-2].split(",")])
    if t.startswith("<") and t.endswith(">"):
        return qform([int(x) for x in t[1:-1].split(",")])
    raise ParseError(f"unrecognised form syntax: {text!r}")


def parse_form(obj) -> QForm:
    """Composable JSON descriptor: diag / pfister / tensor / sum / scale."""
    if isinstance(obj, str):
        return parse_form_text(obj)
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ParseError(f"form descriptor must be a single-key object: {obj!r}")
    key, val = next(iter(obj.items()))
    if key == "diag":
        return qform([parse_rat(x) for x in val])
    if key == "pfister":
        return pfister([parse_rat(x) for x in val])
    if key == "tensor":
        parts = [parse_form(x) for x in val]
        out = parts[0]
        for p in parts[1:]:
            out = tensor(out, p)
        return out
    if key == "sum":
        parts = [parse_form(x) for x in val]
        out = parts[0]
        for p in parts[1:]:
            out = orth_sum(out, p)
        return out
    if key == "scale":
        c, rest = val[0], val[1]
        return scale(parse_rat(c), parse_form(rest))
    raise ParseError(f"unknown form descriptor key: {key!r}")


def dump_form(phi: QForm) -> dict:
    return {"diag": list(phi.entries)}


# ----------------------------------------------------------------------
# Towers.


def parse_tower_text(text: str) -> ExtensionTower:
    """`Q` or `Q(sqrt d1, sqrt d2)`."""
    t = text.strip()
    if t == "Q":
        return make_tower([])
    if not (t.startswith("Q(") and t.endswith(")")):
        raise ParseError(f"unrecognised tower syntax: {text!r}")
    ds = []
    for part in t[2:-1].split(","):
        part = part.strip()
        if not part.startswith("sqrt"):
            raise ParseError(f"unrecognised tower generator: {part!r}")
        ds.append(int(part[4:].strip()))
    return make_tower(ds)


def parse_tower(obj) -> ExtensionTower:
    if isinstance(obj, str):
        return parse_tower_text(obj)
    if isinstance(obj, dict) and set(obj) == {"tower"}:
        return make_tower([int(parse_rat(x)) for x in obj["tower"]])
    raise ParseError(f"unrecognised tower descriptor: {obj!r}")


def dump_tower(M: ExtensionTower) -> dict:
    return {
        "generators": list(M.generators),
        "degree": M.degree,
        "downgraded": M.downgraded,
    }


# ----------------------------------------------------------------------
# Quaternions and involution algebras.


def parse_quaternion(obj) -> QuaternionAlg:
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return quaternion(int(parse_rat(obj[0])), int(parse_rat(obj[1])))
    if isinstance(obj, dict) and set(obj) == {"quaternion"}:
        return parse_quaternion(obj["quaternion"])
    raise ParseError(f"unrecognised quaternion descriptor: {obj!r}")


def parse_inv_algebra(obj) -> InvolutionAlgebra:
    if isinstance(obj, dict) and set(obj) == {"inv_algebra"}:
        obj = obj["inv_algebra"]
    if not isinstance(obj, dict) or set(obj) != {"phi", "q"}:
        raise ParseError(f"unrecognised involution algebra descriptor: {obj!r}")
    return InvolutionAlgebra(parse_form(obj["phi"]), parse_quaternion(obj["q"]))


# ----------------------------------------------------------------------
# Places, completions, certificates, reports.


def dump_place(v: Place) -> str:
    return str(v)


def dump_completion(E: LocalField) -> dict:
    return {
        "base": dump_place(E.base),
        "generators": list(E.gens),
        "e": E.e,
        "f": E.f,
        "degree": E.degree,
    }


def dump_certificate(cert: HypCertificate) -> dict:
    return {
        "schema": CERTIFICATE_SCHEMA,
        "multiplier": cert.multiplier,
        "tower": dump_tower(cert.tower),
        "square_adjustment": dump_rat(cert.square_adjustment),
        "evidence": [
            {
                "place": dump_place(ev.place),
                "completion": dump_completion(ev.completion),
                "multiplicity": ev.multiplicity,
                "local_verdict": {"aniso_dim": ev.aniso_dim,
                                  "hyperbolic": ev.aniso_dim == 0},
            }
            for ev in cert.evidence
        ],
    }


def parse_certificate(obj) -> HypCertificate:
    if not isinstance(obj, dict) or obj.get("schema") != CERTIFICATE_SCHEMA:
        raise ParseError("certificate payload must carry schema "
                          f"{CERTIFICATE_SCHEMA!r}")
    tower = make_tower(obj["tower"]["generators"])
    # Evidence is advisory for verification: conclusions are recomputed.
    return HypCertificate(
        multiplier=int(parse_rat(obj["multiplier"])),
        tower=tower,
        square_adjustment=parse_rat(obj.get("square_adjustment", 1)),
        evidence=(),
    )


def dump_decomposition(dec: PfisterDecomposition) -> dict:
    return {
        "scale4": dec.scale4,
        "slots4": list(dec.slots4),
        "scale3": dec.scale3,
        "slots3": list(dec.slots3),
    }


def dump_multiplier_result(res: MultiplierResult) -> dict:
    out: dict = {"multiplier": res.multiplier, "status": res.status}
    if res.certificate is not None:
        out["certificate"] = dump_certificate(res.certificate)
    if res.bound is not None:
        out["bound"] = res.bound
    return out


def dump_report(rep: PipelineReport) -> dict:
    out: dict = {
        "schema": REPORT_SCHEMA,
        "description": rep.description,
        "checks": [
            {"name": name, "passed": passed, "detail": detail}
            for name, passed, detail in rep.checks
        ],
        "hypotheses_passed": rep.hypotheses_passed,
    }
    if rep.halted_at is not None:
        out["halted_at"] = rep.halted_at
    if rep.psi is not None:
        out["psi"] = dump_form(rep.psi)
    out["multipliers"] = [dump_multiplier_result(m) for m in rep.multipliers]
    return out
