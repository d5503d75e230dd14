"""Command-line interface.

Subcommands: classify, eigenpairs, orbit-check, canonical, transform.
Inputs may be a file path or inline text: JSON (leading ``{``), an inline
form ``cubic:1,0,-3,0`` / ``quartic:1,0,0,0,-1``, or PDE text.

Exit codes: 0 success, 2 input error, 3 numerical ambiguity, 4 orbit-check
disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .algebra import (
    BinaryForm,
    SymmetricTensor2,
    Transform2,
    decode_form,
    decode_tensor,
    decode_transform,
    encode_form,
    encode_transform,
    random_transform,
    tensor_to_form,
    transform,
)
from .classify import (
    ROOT_FALLBACK,
    canonical_form,
    classify,
    classify_real,
    complex_type_details,
    encode_report,
)
from .errors import AmbiguityError, InputError, TensorClassError
from .pde import (
    PdePrincipal,
    classify_pde,
    decode_pde,
    encode_pde,
    encode_pde_report,
    parse_pde,
    pde_to_form,
    render_pde,
    transform_pde,
)
from .scalars import format_scalar, to_scalar
from .spectra import InfiniteEigenpairs, eigenpairs, encode_class, encode_signature, signature
from .tolerances import DEFAULT, Tolerances

EXIT_OK, EXIT_INPUT, EXIT_AMBIGUOUS, EXIT_DISAGREE = 0, 2, 3, 4
_INLINE_DEGREES = {"cubic": 3, "quartic": 4}


@dataclass(frozen=True)
class CliConfig:
    mode: str = "float"
    tol: Tolerances = DEFAULT
    seed: int = 0
    json: bool = False
    trials: int = 100


# --------------------------------------------------------------------------
# input handling


def read_input(arg: str, mode: str):
    """Form, tensor, PDE principal or transform from a path or inline text."""
    text = arg
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    text = text.strip()
    if not text:
        raise InputError("empty input")
    if text.startswith("{"):
        return _from_json(text, mode)
    head, sep, rest = text.partition(":")
    if sep and head.strip().lower() in _INLINE_DEGREES:
        return _inline_form(head.strip().lower(), rest, mode)
    return parse_pde(text, mode)


def _from_json(text: str, mode: str):
    parse_float = Fraction if mode == "exact" else float
    try:
        obj = json.loads(text, parse_float=parse_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("JSON input must be an object")
    if "entries" in obj or "full" in obj:
        return decode_tensor(obj, mode)
    if "degree" in obj:
        return decode_form(obj, mode)
    if "order" in obj and "coeffs" in obj:
        return decode_pde(obj, mode)
    if "p" in obj:
        return decode_transform(obj, mode)
    raise InputError("unrecognized JSON input; expected a tensor, form, PDE or transform")


def _inline_form(kind: str, rest: str, mode: str) -> BinaryForm:
    parts = [p.strip() for p in rest.split(",")]
    if any(not p for p in parts):
        raise InputError(f"empty coefficient in {kind}:{rest}")
    degree = _INLINE_DEGREES[kind]
    if len(parts) != degree + 1:
        raise InputError(f"{kind} needs {degree + 1} coefficients, got {len(parts)}")
    return BinaryForm.from_coeffs([to_scalar(p, mode) for p in parts], mode)


def as_form(obj, mode: str) -> BinaryForm:
    if isinstance(obj, SymmetricTensor2):
        obj = tensor_to_form(obj)
    elif isinstance(obj, PdePrincipal):
        obj = pde_to_form(obj)
    elif not isinstance(obj, BinaryForm):
        raise InputError("expected a tensor, form or PDE")
    return obj.to_mode(mode)


def parse_matrix(text: str, mode: str) -> Transform2:
    """``[[a,b],[c,d]]`` JSON, a ``{"p": ...}`` object, or ``a,b,c,d``."""
    text = text.strip()
    if text.startswith("{"):
        obj = _from_json(text, mode)
        if not isinstance(obj, Transform2):
            raise InputError("expected a transform object {\"p\": [[..],[..]]}")
        return obj
    if text.startswith("["):
        try:
            rows = json.loads(text, parse_float=Fraction if mode == "exact" else float)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed matrix: {exc}") from None
        return decode_transform({"p": rows}, mode)
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise InputError("matrix needs four entries p11,p12,p21,p22")
    return Transform2.from_matrix([[to_scalar(parts[0], mode), to_scalar(parts[1], mode)],
                                   [to_scalar(parts[2], mode), to_scalar(parts[3], mode)]], mode)


# --------------------------------------------------------------------------
# commands


def _emit(config: CliConfig, data, text: str, out):
    if config.json:
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print(text, file=out)


def cmd_classify(arg: str, config: CliConfig, out=None) -> int:
    obj = read_input(arg, config.mode)
    if isinstance(obj, PdePrincipal):
        report = classify_pde(obj, config.tol)
        data = encode_pde_report(report)
        data["principal"] = encode_pde(obj)
        _emit(config, data, str(report), out)
        return EXIT_OK
    report = classify(as_form(obj, config.mode), config.tol)
    _emit(config, encode_report(report), str(report), out)
    return EXIT_OK


def format_class(c) -> str:
    x, y = (format_scalar(v) for v in (c.direction.x, c.direction.y))
    text = f"({format_scalar(c.lam)}, ({x}, {y}))"
    notes = [f"multiplicity {c.multiplicity}"]
    if c.is_zero:
        notes.append("zero")
    return f"{text}  {', '.join(notes)}"


def cmd_eigenpairs(arg: str, config: CliConfig, out=None) -> int:
    f = as_form(read_input(arg, config.mode), config.mode)
    result = eigenpairs(f, config.tol)
    if isinstance(result, InfiniteEigenpairs):
        text = "infinite (degenerate: Q ≡ 0)" if result.degenerate else "infinite"
        _emit(config, {"eigenpairs": "inf", "degenerate": result.degenerate}, text, out)
        return EXIT_OK
    lines = [f"{len(result)} classes"] + [format_class(c) for c in result]
    data = {"eigenpairs": [encode_class(c) for c in result], "signature": encode_signature(signature(f, config.tol))}
    _emit(config, data, "\n".join(lines), out)
    return EXIT_OK


def cmd_canonical(order: int, domain: str, type_id: int, mu, config: CliConfig, out=None) -> int:
    if mu is not None:
        mu = to_scalar(mu)
    f = canonical_form(type_id, order, domain, mu)
    _emit(config, encode_form(f), _form_text(f), out)
    return EXIT_OK


def _form_text(f: BinaryForm) -> str:
    return f"form: {f}\ncoeffs: {', '.join(format_scalar(c) for c in f.coeffs)}"


def cmd_transform(arg: str, matrix: str, config: CliConfig, out=None) -> int:
    obj = read_input(arg, config.mode)
    P = parse_matrix(matrix, config.mode)
    if isinstance(obj, PdePrincipal):
        p = transform_pde(obj, P)
        _emit(config, encode_pde(p), render_pde(p), out)
        return EXIT_OK
    g = transform(as_form(obj, config.mode), P)
    _emit(config, encode_form(g), _form_text(g), out)
    return EXIT_OK


@dataclass
class _Batch:
    name: str
    expected: int
    agree: int = 0
    total: int = 0
    sig_agree: int = 0
    fallbacks: int = 0


def _trial_transform(config: CliConfig, batch: int, i: int, real_only: bool) -> Transform2:
    return random_transform([config.seed, batch, i], real_only=real_only, exact=config.mode == "exact")


def cmd_orbit_check(arg: str, config: CliConfig, out=None) -> int:
    f = as_form(read_input(arg, config.mode), config.mode)
    base_complex, _, base_sig, _ = complex_type_details(f, config.tol)
    base_real = classify_real(f, config.tol).type_id if f.is_real else None
    batches = []
    if base_real is not None:
        batches.append((_Batch("real", base_real), True))
    batches.append((_Batch("complex", base_complex), False))
    counterexamples = []
    for index, (batch, real_only) in enumerate(batches):
        for i in range(config.trials):
            P = _trial_transform(config, index, i, real_only)
            g = transform(f, P)
            batch.total += 1
            try:
                got_complex, method, sig, _ = complex_type_details(g, config.tol)
                got = classify_real(g, config.tol).type_id if real_only else got_complex
            except AmbiguityError as exc:
                counterexamples.append((batch.name, i, P, f"{type(exc).__name__}: {exc}"))
                continue
            batch.fallbacks += method == ROOT_FALLBACK
            if sig == base_sig or sig.degenerate or base_sig.degenerate:
                batch.sig_agree += 1
            if got == batch.expected:
                batch.agree += 1
            else:
                counterexamples.append((batch.name, i, P, f"Type {got}, expected Type {batch.expected}"))
    ok = not counterexamples
    lines = [f"input: complex Type {base_complex}"
             + (f", real Type {base_real}" if base_real is not None else "")
             + f", signature {base_sig}"]
    for batch, _ in batches:
        lines.append(f"{batch.name}: {batch.agree}/{batch.total} {batch.name} Type {batch.expected}; "
                     f"signature {batch.sig_agree}/{batch.total}; degenerate fallback {batch.fallbacks}")
    for name, i, P, what in sorted(counterexamples, key=lambda c: (c[0], c[1])):
        lines.append(f"counterexample: batch={name} trial={i} P={json.dumps(encode_transform(P)['p'])} -> {what}")
    lines.append("agreement: full" if ok else "agreement: FAILED")
    data = {
        "input": {"complexType": base_complex, "realType": base_real, "signature": encode_signature(base_sig)},
        "batches": [
            {"name": b.name, "expected": b.expected, "agree": b.agree, "trials": b.total,
             "signatureAgree": b.sig_agree, "degenerateFallback": b.fallbacks}
            for b, _ in batches
        ],
        "counterexamples": [
            {"batch": name, "trial": i, "p": encode_transform(P)["p"], "result": what}
            for name, i, P, what in sorted(counterexamples, key=lambda c: (c[0], c[1]))
        ],
        "agreement": ok,
    }
    _emit(config, data, "\n".join(lines), out)
    return EXIT_OK if ok else EXIT_DISAGREE


# --------------------------------------------------------------------------
# argument parsing


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("float", "exact"), default="float",
                        help="scalar arithmetic (default: float)")
    common.add_argument("--eps-root", type=float, default=DEFAULT.eps_root, help="root clustering tolerance")
    common.add_argument("--eps-real", type=float, default=DEFAULT.eps_real, help="real/non-real decision tolerance")
    common.add_argument("--eps-eig", type=float, default=DEFAULT.eps_eig, help="zero-eigenvalue tolerance")
    common.add_argument("--seed", type=int, default=0, help="seed for orbit-check (default: 0)")
    common.add_argument("--trials", type=int, default=100, help="trials per orbit-check batch (default: 100)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="tensorclass",
        description="Classify 2-dimensional symmetric tensors, binary cubics/quartics and PDE principal parts.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="complex and real equivalence types")
    p.add_argument("input", help="file, JSON, cubic:/quartic: coefficients, or PDE text")

    p = sub.add_parser("eigenpairs", parents=[common], help="list eigenpair classes")
    p.add_argument("input")

    p = sub.add_parser("orbit-check", parents=[common], help="check invariance under random transforms")
    p.add_argument("input")

    p = sub.add_parser("canonical", parents=[common], help="table representative of a type")
    p.add_argument("--order", type=int, required=True, choices=(3, 4))
    p.add_argument("--domain", choices=("real", "complex"), default="complex")
    p.add_argument("--type", dest="type_id", type=int, required=True)
    p.add_argument("--mu", default=None, help="modulus for the x^4 + 6 mu x^2 y^2 +- y^4 rows")

    p = sub.add_parser("transform", parents=[common], help="apply x = p11 u + p12 v, y = p21 u + p22 v")
    p.add_argument("input")
    p.add_argument("--p", dest="matrix", required=True, help="[[p11,p12],[p21,p22]] or p11,p12,p21,p22")
    return parser


def _config(args) -> CliConfig:
    if args.trials < 1:
        raise InputError("--trials must be positive")
    if args.seed < 0:
        raise InputError("--seed must be non-negative")
    tol = Tolerances(eps_root=args.eps_root, eps_real=args.eps_real, eps_eig=args.eps_eig)
    return CliConfig(mode=args.mode, tol=tol, seed=args.seed, json=args.json, trials=args.trials)


def run(args, out=None) -> int:
    config = _config(args)
    if args.command == "classify":
        return cmd_classify(args.input, config, out)
    if args.command == "eigenpairs":
        return cmd_eigenpairs(args.input, config, out)
    if args.command == "orbit-check":
        return cmd_orbit_check(args.input, config, out)
    if args.command == "canonical":
        return cmd_canonical(args.order, args.domain, args.type_id, args.mu, config, out)
    if args.command == "transform":
        return cmd_transform(args.input, args.matrix, config, out)
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AmbiguityError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_AMBIGUOUS
    except TensorClassError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
