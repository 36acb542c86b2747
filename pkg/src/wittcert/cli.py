"""Command-line surface: every engine capability behind one verb with JSON
input and output.

    wittcert <verb> '<json payload>' [--bound N] [--trace] [--seed N]

Exit status: 0 on success (including explicit not-found results), 2 when a
hypothesis check or precondition fails (the failing check is named), 1 on
malformed input.  Output is deterministic: fixed key order, exact integers
and rational strings, never floats.  The default search bound can also be
set through the WITTCERT_SEARCH_BOUND environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .arith import DomainError
from . import codecs
from .codecs import ParseError
from .extensions import (
    hyperbolicity_evidence,
    is_hyperbolic_over,
    norm_member,
    norm_member_tower,
    witt_index_over,
)
from .forms import (
    disc,
    hasse_invariant,
    in_G,
    in_In,
    is_hyperbolic,
    is_isometric,
    is_isotropic,
    relevant_places,
    signature,
    witt_decompose,
)
from .involutions import degree_index, involution_discriminant, is_split, norm_form, reduce_to_form
from .similitude import (
    DEFAULT_BOUND,
    SearchExhausted,
    lemma24_certificate,
    lemma_beta_search,
    thm4_decompose,
    thm6_pipeline,
    verify_certificate,
)

VERBS = (
    "invariants", "isotropic", "witt", "isometric", "pfister-expand",
    "in-g", "in-in", "quaternion", "delta", "reduce", "lemma-beta",
    "lemma24", "thm4", "thm6", "verify-cert", "norm-member",
)


class HypothesisFailure(Exception):
    """Named hypothesis-check failure: exit status 2."""


def _form_invariants(phi, trace: bool) -> dict:
    w, aniso, cls = witt_decompose(phi)
    out = {
        "dim": phi.dim,
        "disc": disc(phi),
        "signature": signature(phi),
        "hasse_minus_places": sorted(
            (str(v) for v in cls.hasse_minus_places), key=_place_sort),
        "isotropic": is_isotropic(phi),
        "witt_index": w,
        "aniso_dim": aniso,
    }
    if trace:
        out["hasse"] = [
            {"place": str(v), "value": hasse_invariant(phi, v)}
            for v in relevant_places(phi)
        ]
    return out


def _place_sort(s: str):
    return (0, 0) if s == "real" else (1, int(s))


def _trace_evidence(phi, tower) -> list[dict]:
    return [
        {
            "place": codecs.dump_place(ev.place),
            "completion": codecs.dump_completion(ev.completion),
            "multiplicity": ev.multiplicity,
            "local_verdict": {"aniso_dim": ev.aniso_dim,
                              "hyperbolic": ev.aniso_dim == 0},
        }
        for ev in hyperbolicity_evidence(phi, tower)
    ]


def _run_verb(verb: str, payload, opts) -> dict:
    from .extensions import TRIVIAL_TOWER

    if verb == "invariants":
        return _form_invariants(codecs.parse_form(payload), opts.trace)

    if verb == "isotropic":
        phi = codecs.parse_form(payload)
        out = {"isotropic": is_isotropic(phi)}
        if opts.trace:
            out["evidence"] = _trace_evidence(phi, TRIVIAL_TOWER)
        return out

    if verb == "witt":
        if isinstance(payload, dict) and "form" in payload:
            phi = codecs.parse_form(payload["form"])
            if "tower" in payload:
                tower = codecs.parse_tower(payload["tower"])
                return {"witt_index": witt_index_over(phi, tower),
                        "hyperbolic": is_hyperbolic_over(phi, tower)}
        else:
            phi = codecs.parse_form(payload)
        w, aniso, cls = witt_decompose(phi)
        return {"witt_index": w, "aniso_dim": aniso,
                "hyperbolic": is_hyperbolic(phi),
                "aniso_class": {
                    "dim_parity": cls.dim_parity,
                    "disc": cls.disc,
                    "hasse_minus_places": sorted(
                        (str(v) for v in cls.hasse_minus_places), key=_place_sort),
                    "signature": cls.signature,
                }}

    if verb == "isometric":
        left = codecs.parse_form(payload["left"])
        right = codecs.parse_form(payload["right"])
        return {"isometric": is_isometric(left, right)}

    if verb == "pfister-expand":
        phi = codecs.parse_form(payload)
        return {"diag": list(phi.entries)}

    if verb == "in-g":
        phi = codecs.parse_form(payload["form"])
        c = codecs.parse_rat(payload["c"])
        return {"c": codecs.dump_rat(c), "in_g": in_G(phi, c)}

    if verb == "in-in":
        phi = codecs.parse_form(payload["form"])
        n = int(payload["n"])
        return {"n": n, "in_in": in_In(phi, n)}

    if verb == "quaternion":
        q = codecs.parse_quaternion(payload)
        return {"norm_form": list(norm_form(q).entries), "split": is_split(q)}

    if verb == "delta":
        alg = codecs.parse_inv_algebra(payload)
        degree, index = degree_index(alg)
        delta, trivial = involution_discriminant(alg)
        return {
            "degree": degree,
            "index": index,
            "delta_pfister": list(delta.entries),
            "trivial": trivial,
        }

    if verb == "reduce":
        alg = codecs.parse_inv_algebra(payload)
        return {"diag": list(reduce_to_form(alg).entries)}

    if verb == "lemma-beta":
        phi = codecs.parse_form(payload["form"])
        a = codecs.parse_rat(payload["a"])
        d = lemma_beta_search(phi, a, opts.bound)
        if d is None:
            return {"result": "not-found-within-bounds", "bound": opts.bound}
        return {"d": d}

    if verb == "lemma24":
        pi = codecs.parse_form(payload["pi"])
        psi = codecs.parse_form(payload["psi"])
        c = codecs.parse_rat(payload["c"])
        outcome = lemma24_certificate(pi, psi, c, opts.bound)
        if isinstance(outcome, SearchExhausted):
            return {"result": "not-found-within-bounds", "bound": outcome.bound,
                    "stage": outcome.stage}
        out = {"certificate": codecs.dump_certificate(outcome)}
        if opts.trace:
            from .forms import tensor

            out["trace"] = _trace_evidence(tensor(pi, psi), outcome.tower)
        return out

    if verb == "thm4":
        phi = codecs.parse_form(payload["phi"])
        q = codecs.parse_quaternion(payload["q"])
        dec = thm4_decompose(phi, q)
        return codecs.dump_decomposition(dec)

    if verb == "thm6":
        phi = codecs.parse_form(payload["phi"])
        q = codecs.parse_quaternion(payload["q"])
        multipliers = payload.get("multipliers")
        if multipliers is not None:
            multipliers = [codecs.parse_rat(c) for c in multipliers]
        rep = thm6_pipeline(phi, q, multipliers, opts.bound, opts.seed)
        out = codecs.dump_report(rep)
        if not rep.hypotheses_passed:
            raise HypothesisFailure(json.dumps(out, indent=2))
        return out

    if verb == "verify-cert":
        phi = codecs.parse_form(payload["form"])
        cert = codecs.parse_certificate(payload["certificate"])
        return {"valid": verify_certificate(phi, cert)}

    if verb == "norm-member":
        c = codecs.parse_rat(payload["c"])
        if "tower" in payload:
            tower = codecs.parse_tower({"tower": payload["tower"]})
            return {"member": norm_member_tower(c, tower)}
        return {"member": norm_member(c, int(payload["d"]))}

    raise DomainError(f"unknown verb {verb!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittcert",
        description="Exact quadratic-form engine over Q: invariants, "
                    "local-global decisions, and hyperbolicity certificates.",
    )
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("payload", nargs="?", default="{}",
                        help="JSON payload (or a bare form/tower string)")
    parser.add_argument("--bound", type=int,
                        default=int(os.environ.get("WITTCERT_SEARCH_BOUND", DEFAULT_BOUND)),
                        help="search bound for square-free tower generators")
    parser.add_argument("--trace", action="store_true",
                        help="emit per-place local evidence for hyperbolicity verdicts")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for multiplier sampling when none are supplied")
    parser.add_argument("--output-format", choices=("json",), default="json")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        payload = json.loads(opts.payload)
    except json.JSONDecodeError:
        # Accept the bare text syntaxes as a convenience.
        payload = opts.payload
    try:
        result = _run_verb(opts.verb, payload, opts)
    except HypothesisFailure as exc:
        print(str(exc))
        return 2
    except ParseError as exc:
        print(json.dumps({"error": "malformed-input", "detail": str(exc)}, indent=2))
        return 1
    except DomainError as exc:
        print(json.dumps({"error": "precondition-failed", "detail": str(exc)}, indent=2))
        return 2
    except (KeyError, TypeError, ValueError) as exc:
        print(json.dumps({"error": "malformed-input", "detail": str(exc)}, indent=2))
        return 1
    print(json.dumps(result, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
