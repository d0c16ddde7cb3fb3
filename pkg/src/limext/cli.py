"""Batch command-line front end with JSON input and output.

Every operation is exposed through a subcommand taking a single JSON
payload (inline argument, file, or stdin) and writing a JSON result to
stdout or a file.  Integers travel as decimal strings so arbitrary
precision survives the wire; cardinal multiplicities are plain integers or
the string "continuum".  Output key order is fixed, so identical input
yields byte-identical output.

Exit codes: 0 success, 1 domain error (structured error JSON), 2 malformed
input (bad JSON or schema violation).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from importlib import resources

from .descriptors import GroupDescriptor
from .errors import DomainError
from .fg_groups import (
    GroupPresentation,
    GroupStructure,
    cokernel_structure,
    direct_sum,
    finite_coefficients,
)
from .functors import (
    completion_cokernel,
    extension_classes,
    finite_coefficients_descriptor,
    lim1_mult_p,
    max_p_divisible,
    six_term_mult_p,
    tate_module,
)
from .invariants import (
    BrauerInvariants,
    abelian_surface_picard_rank,
    compute_r,
    generic_fiber_brauer_corank,
    invariant_report,
    jacobian_example_report,
    k3_abelian_structure,
    model_corank_relation,
)
from .inverse_systems import (
    InverseSystemSpec,
    is_mittag_leffler,
    lim1_classify,
    lim_structure,
    validate_system,
)
from .matrices import IntMatrix, check_exact_at, smith_normal_form
from .rank1 import EProfile, eprofile_from_multipliers, ext_to_z, hom_to_z, is_free, quotient_mod_z
from .submodules import TaggedGenerators, classify_submodule
from .valuations import TruncatedPolyRing, check_binomial_lemma, unit_power_check, vp_binomial, vp_factorial

SUBCOMMANDS = (
    "snf", "group", "descriptor", "lim1", "ml", "ext-rank1",
    "classify-submodule", "valuation", "brauer", "report",
)


class SchemaViolation(Exception):
    pass


def load_schema(name: str) -> dict:
    if name not in SUBCOMMANDS:
        raise SchemaViolation(f"unknown subcommand {name!r}")
    text = resources.files("limext.schemas").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def _validate(instance, schema: dict, path: str = "$") -> None:
    """Validate against the subset of JSON Schema used by the published files."""
    if "oneOf" in schema:
        errors = []
        for option in schema["oneOf"]:
            try:
                _validate(instance, option, path)
                return
            except SchemaViolation as exc:
                errors.append(str(exc))
        raise SchemaViolation(f"{path}: no schema alternative matched "
                              f"({'; '.join(errors)})")
    if "enum" in schema:
        if instance not in schema["enum"]:
            raise SchemaViolation(f"{path}: expected one of {schema['enum']}, "
                                  f"got {instance!r}")
        return
    types = schema.get("type")
    if types is not None:
        if isinstance(types, str):
            types = [types]
        checks = {
            "object": lambda x: isinstance(x, dict),
            "array": lambda x: isinstance(x, list),
            "string": lambda x: isinstance(x, str),
            "integer": lambda x: isinstance(x, int) and not isinstance(x, bool),
            "boolean": lambda x: isinstance(x, bool),
        }
        if not any(checks[t](instance) for t in types):
            raise SchemaViolation(f"{path}: expected {' or '.join(types)}")
    if isinstance(instance, str) and "pattern" in schema:
        if not re.fullmatch(schema["pattern"], instance):
            raise SchemaViolation(f"{path}: {instance!r} does not match "
                                  f"{schema['pattern']}")
    if isinstance(instance, dict):
        props = schema.get("properties", {})
        for key in schema.get("required", ()):
            if key not in instance:
                raise SchemaViolation(f"{path}: missing required key {key!r}")
        extra = schema.get("additionalProperties", True)
        for key, value in instance.items():
            if key in props:
                _validate(value, props[key], f"{path}.{key}")
            elif extra is False:
                raise SchemaViolation(f"{path}: unexpected key {key!r}")
            elif isinstance(extra, dict):
                _validate(value, extra, f"{path}.{key}")
    if isinstance(instance, list):
        if len(instance) < schema.get("minItems", 0):
            raise SchemaViolation(f"{path}: expected at least "
                                  f"{schema['minItems']} items")
        if "items" in schema:
            for i, item in enumerate(instance):
                _validate(item, schema["items"], f"{path}[{i}]")


# ---------------------------------------------------------------------------
# Subcommand handlers: payload dict in, JSON-ready dict out.


def _run_snf(payload):
    m = IntMatrix.from_json(payload)
    u, d, v = smith_normal_form(m)
    return {"U": u.to_json(), "D": d.to_json(), "V": v.to_json()}


def _run_group(payload):
    op = payload["op"]
    if op == "cokernel":
        return {"result": cokernel_structure(IntMatrix.from_json(payload["matrix"])).to_json()}
    if op == "presentation":
        pres = GroupPresentation(int(payload["generators"]),
                                 IntMatrix.from_json(payload["relations"]))
        return {"result": pres.structure().to_json()}
    if op == "finite-coefficients":
        quotient, torsion = finite_coefficients(
            GroupStructure.from_json(payload["group"]), int(payload["modulus"])
        )
        return {"quotient": quotient.to_json(), "torsion": torsion.to_json()}
    if op == "direct-sum":
        total = direct_sum(*[GroupStructure.from_json(g) for g in payload["groups"]])
        return {"result": total.to_json()}
    if op == "check-exact":
        return {"result": check_exact_at(
            IntMatrix.from_json(payload["f"]), IntMatrix.from_json(payload["g"])
        )}
    raise SchemaViolation(f"unknown group op {op!r}")


def _run_descriptor(payload):
    op = payload["op"]
    if op == "extension-classes":
        classes = extension_classes(
            GroupDescriptor.from_json(payload["divisible"]),
            GroupStructure.from_json(payload["finite"]),
        )
        ordered = sorted(classes, key=lambda d: json.dumps(d.to_json(), sort_keys=True))
        return {"result": [d.to_json() for d in ordered]}
    g = GroupDescriptor.from_json(payload["group"])
    p = int(payload["p"])
    if op == "tate":
        return {"result": tate_module(g, p).to_json()}
    if op == "max-divisible":
        return {"result": max_p_divisible(g, p).to_json()}
    if op == "lim1":
        return {"result": lim1_mult_p(g, p).to_json()}
    if op == "finite-coefficients":
        quotient, torsion = finite_coefficients_descriptor(g, p, int(payload.get("j", 1)))
        return {"quotient": quotient.to_json(), "torsion": torsion.to_json()}
    if op == "six-term":
        return {"result": six_term_mult_p(g, p).to_json()}
    if op == "completion-cokernel":
        nxt = GroupDescriptor.from_json(payload["next"])
        return {"result": completion_cokernel(g, nxt, p).to_json()}
    raise SchemaViolation(f"unknown descriptor op {op!r}")


def _run_lim1(payload):
    spec = InverseSystemSpec.from_json(payload)
    validated = validate_system(spec)
    strategy = payload.get("strategy", "recursive")
    cls = lim1_classify(validated, strategy)
    return {
        "class": cls.to_json(),
        "lim": lim_structure(validated).to_json(),
        "mittag_leffler": is_mittag_leffler(validated),
        "cokernel_prime_support": [str(q) for q in validated.cokernel_prime_support],
        "single_prime_cokernels": (
            str(validated.p_group_prime) if validated.p_group_prime else None
        ),
    }


def _run_ml(payload):
    return {"mittag_leffler": is_mittag_leffler(InverseSystemSpec.from_json(payload))}


def _run_ext_rank1(payload):
    op = payload["op"]
    if op == "from-multipliers":
        profile = eprofile_from_multipliers(
            [int(a) for a in payload.get("prefix", [])],
            [int(a) for a in payload["period"]],
        )
        return {"result": profile.to_json()}
    profile = EProfile.from_json(payload["profile"])
    if op == "ext":
        return {"result": ext_to_z(profile).to_json()}
    if op == "hom":
        return {"result": hom_to_z(profile).to_json()}
    if op == "quotient":
        return {"result": quotient_mod_z(profile).to_json()}
    if op == "is-free":
        return {"result": is_free(profile)}
    raise SchemaViolation(f"unknown ext-rank1 op {op!r}")


def _run_classify_submodule(payload):
    pair = classify_submodule(TaggedGenerators.from_json(payload))
    return {"result": pair.to_json()}


def _run_valuation(payload):
    op = payload["op"]
    p = int(payload["p"])
    if op == "factorial":
        return {"result": str(vp_factorial(p, int(payload["n"])))}
    if op == "binomial":
        return {"result": str(vp_binomial(p, int(payload["z"]), int(payload["u"])))}
    if op == "lemma":
        return {"result": check_binomial_lemma(p, int(payload["n"]), int(payload["s"]))}
    if op == "unit-power":
        ring = TruncatedPolyRing(p, int(payload["n"]), int(payload["degree_bound"]))
        return {"result": unit_power_check(ring, int(payload["s"]))}
    raise SchemaViolation(f"unknown valuation op {op!r}")


def _run_brauer(payload):
    op = payload.get("op", "report")
    if op == "report":
        return invariant_report(BrauerInvariants.from_json(payload)).to_json()
    if op == "r":
        return {"result": str(compute_r(
            int(payload["rho_Xs"]), int(payload["rho_X"]), int(payload["I"])
        ))}
    if op == "corank":
        return {"result": str(generic_fiber_brauer_corank(
            payload["l_equals_p"], int(payload["f"]), int(payload["h01"]),
            int(payload["dimVlBrXbarGK"]),
        ))}
    if op == "corank-relation":
        return {"result": str(model_corank_relation(
            int(payload["r"]), int(payload["dimVlBrXs"])
        ))}
    if op == "k3-abelian":
        return {"result": k3_abelian_structure(int(payload["r"]), int(payload["p"])).to_json()}
    if op == "picard-rank":
        return {"result": str(abelian_surface_picard_rank(
            payload["shape"],
            int(payload["count1"]) if "count1" in payload else None,
            int(payload["count2"]) if "count2" in payload else None,
            int(payload["p"]) if "p" in payload else None,
        ))}
    if op == "jacobian-example":
        return jacobian_example_report(int(payload["p"])).to_json()
    raise SchemaViolation(f"unknown brauer op {op!r}")


def _run_report(payload):
    report = invariant_report(BrauerInvariants.from_json(payload))
    return {"report": report.to_json(), "summary": report.summary()}


_HANDLERS = {
    "snf": _run_snf,
    "group": _run_group,
    "descriptor": _run_descriptor,
    "lim1": _run_lim1,
    "ml": _run_ml,
    "ext-rank1": _run_ext_rank1,
    "classify-submodule": _run_classify_submodule,
    "valuation": _run_valuation,
    "brauer": _run_brauer,
    "report": _run_report,
}


def _emit(obj, output: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if output and output != "-":
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="limext",
        description="Batch JSON interface to the structure-theory library.",
    )
    parser.add_argument(
        "--schema", metavar="SUBCOMMAND", default=None,
        help="print the JSON schema for a subcommand and exit",
    )
    sub = parser.add_subparsers(dest="subcommand")
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name, help=f"run the {name} operation")
        sp.add_argument(
            "payload", nargs="?", default=None,
            help="JSON payload (omit or use '-' to read stdin)",
        )
        sp.add_argument("--input", "-i", default=None, help="read payload from a file")
        sp.add_argument("--output", "-o", default=None, help="write result to a file")
        sp.add_argument(
            "--schema", action="store_true", dest="print_schema",
            help="print this subcommand's schema and exit",
        )
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.schema is not None and args.subcommand is None:
        try:
            _emit(load_schema(args.schema), None)
        except SchemaViolation as exc:
            _emit({"error": {"code": "schema-violation", "message": str(exc)}}, None)
            return 2
        return 0
    if args.subcommand is None:
        parser.print_usage(sys.stderr)
        return 2
    if getattr(args, "print_schema", False):
        _emit(load_schema(args.subcommand), args.output)
        return 0

    if args.input:
        try:
            with open(args.input) as fh:
                raw = fh.read()
        except OSError as exc:
            _emit({"error": {"code": "input-unreadable", "message": str(exc)}}, args.output)
            return 2
    elif args.payload not in (None, "-"):
        raw = args.payload
    else:
        raw = sys.stdin.read()

    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        _emit({"error": {"code": "malformed-json", "message": str(exc)}}, args.output)
        return 2

    try:
        _validate(payload, load_schema(args.subcommand))
    except SchemaViolation as exc:
        _emit({"error": {"code": "schema-violation", "message": str(exc)}}, args.output)
        return 2

    try:
        result = _HANDLERS[args.subcommand](payload)
    except DomainError as exc:
        _emit({"error": exc.to_json()}, args.output)
        return 1

    _emit(result, args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
