from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List

import numpy as np

from mdburst.analysis.bounds import render_csv as render_bounds_csv
from mdburst.analysis.bounds import render_text as render_bounds_text
from mdburst.analysis.bounds import summary_table, upper_bound_for
from mdburst.analysis.verify import (
    cross_check_counts,
    render_csv,
    render_text,
    run_suite,
    verify_fault_detection,
    verify_lee_code,
    verify_xi_bound,
)
from mdburst.codes.constructions import MODEL_VARIANTS, BurstCode, CodeSpec, Variant, build_code
from mdburst.codes.decoders import apply_outcome, decode
from mdburst.codes.designs import write_design
from mdburst.codes.words import ArrayWord, encode, read_spec, read_word, word_to_text, write_spec, write_word
from mdburst.commander.module import ArgumentSpec, Json, Module, Reply
from mdburst.core.errors import ParameterError
from mdburst.core.settings import MdbConfig
from mdburst.lattice.models import (
    ModelKind,
    count_l1,
    count_l1_lower,
    count_linf,
    count_model,
    count_straight,
    enumerate_errors,
    golomb_welch_count,
)

log = logging.getLogger(__name__)

Args = Dict[str, Json]


@dataclass
class CommandContext:
    """Settings the CLI resolves after parsing; handlers read them at call time."""

    cfg: MdbConfig = field(default_factory=MdbConfig)


SPEC_ARGS = [
    ArgumentSpec("spec", "path", flags=("--spec",), help="code spec file written by build"),
    ArgumentSpec("model", "string", flags=("--model",), choices=[k.value for k in ModelKind], help="burst model"),
    ArgumentSpec("variant", "string", flags=("--variant",), choices=[v.value for v in Variant],
                 help="construction variant; defaults to the model's first"),
    ArgumentSpec("n", "int", flags=("-n",), help="base side length"),
    ArgumentSpec("b", "int", flags=("-b",), help="burst size"),
    ArgumentSpec("D", "int", flags=("-D",), help="dimension"),
    ArgumentSpec("design", "string", flags=("--design",), choices=["trivial", "steiner"],
                 help="packing design for the straight model"),
]


def _resolve_spec(args: Args) -> CodeSpec:
    if args.get("spec"):
        return read_spec(str(args["spec"]))
    missing = [k for k in ("model", "n", "b", "D") if args.get(k) is None]
    if missing:
        raise ParameterError(f"need --spec or all of --model/-n/-b/-D (missing: {', '.join(missing)})")
    model = ModelKind(args["model"])
    variant = args.get("variant") or MODEL_VARIANTS[model][0].value
    return CodeSpec(model, variant, int(args["n"]), int(args["b"]), int(args["D"]), args.get("design"))


def _read_word_for(code: BurstCode, path: str) -> ArrayWord:
    word = read_word(path)
    if (word.side, word.D) != (code.side, code.D):
        raise ParameterError(
            f"word is side={word.side} D={word.D}, code expects side={code.side} D={code.D}"
        )
    return word


def build_command_module(ctx: CommandContext) -> Module:
    m = Module()

    def _code(args: Args) -> BurstCode:
        return build_code(_resolve_spec(args), ctx.cfg.caps)

    ##################
    # CONSTRUCTION
    def build(args: Args) -> Reply:
        code = _code(args)
        spec = code.spec
        source, bound = upper_bound_for(spec)
        params = " ".join(f"{k}={v}" for k, v in code.params.items())
        lines = [
            spec.label(),
            f"N={code.N} rows={code.rows} rank={code.rank} k={code.k} xi={code.xi} bound={bound:.4f} ({source})",
            params,
        ]
        if spec.variant is Variant.BASIC:
            lines.append(verify_xi_bound(code).detail)
        log.info("built %s: N=%d rows=%d xi=%d", spec.label(), code.N, code.rows, code.xi)
        if args.get("out"):
            write_spec(str(args["out"]), spec)
            lines.append(f"spec written to {args['out']}")
        if args.get("design_out"):
            if "design" not in code.parts:
                raise ParameterError("--design-out applies to the straight model only")
            write_design(str(args["design_out"]), code.parts["design"])
            lines.append(f"design written to {args['design_out']}")
        return {
            "ok": True,
            "text": "\n".join(lines),
            "N": code.N,
            "rows": code.rows,
            "rank": code.rank,
            "xi": code.xi,
            "bound": bound,
        }

    ##################
    # WORDS
    def encode_cmd(args: Args) -> Reply:
        code = _code(args)
        if args.get("message"):
            msg = [int(ch) for ch in str(args["message"]).strip()]
            if any(x not in (0, 1) for x in msg):
                raise ParameterError("message must be a string of 0 and 1")
        else:
            rng = np.random.default_rng(ctx.cfg.verify.seed)
            msg = list(rng.integers(0, 2, size=code.k))
        word = encode(code, msg)
        write_word(str(args["out"]), word)
        return {"ok": True, "text": f"k={code.k} N={code.N} codeword written to {args['out']}"}

    def corrupt(args: Args) -> Reply:
        code = _code(args)
        spec = code.spec
        caps = ctx.cfg.caps
        word = _read_word_for(code, str(args["input"]))
        caps.check("patterns", count_model(code.side, spec.b, spec.D, spec.model, caps))
        patterns = list(enumerate_errors(code.side, spec.D, spec.burst_model, caps))
        rng = np.random.default_rng(ctx.cfg.verify.seed)
        pattern = patterns[int(rng.integers(len(patterns)))]
        write_word(str(args["out"]), word.flipped([code.index(c) for c in pattern.positions]))
        return {"ok": True, "text": f"injected {pattern}", "weight": pattern.weight}

    def decode_cmd(args: Args) -> Reply:
        code = _code(args)
        word = _read_word_for(code, str(args["input"]))
        outcome = decode(code, word, ctx.cfg.caps)
        lines = [str(outcome)]
        if outcome.corrected:
            fixed = apply_outcome(code, word, outcome)
            if args.get("out"):
                write_word(str(args["out"]), fixed)
                lines.append(f"corrected word written to {args['out']}")
            else:
                lines.append(word_to_text(fixed).rstrip())
        return {"ok": outcome.corrected, "text": "\n".join(lines), "outcome": outcome.kind.value}

    ##################
    # ANALYSIS
    def verify(args: Args) -> Reply:
        code = _code(args)
        cfg = ctx.cfg
        report = run_suite(code, cfg.verify, cfg.caps)
        spec = code.spec
        report.checks.append(cross_check_counts(code.side, spec.b, spec.D, cfg.caps))
        if spec.variant is Variant.LEE:
            report.checks.append(verify_lee_code(code.params["p"], spec.b, spec.D, cfg.caps))
        if args.get("faults"):
            report.checks.append(verify_fault_detection(code, cfg.caps))
        text = render_csv(report) if args.get("csv") else render_text(report)
        if args.get("out"):
            with open(str(args["out"]), "w") as f:
                f.write(text)
        return {"ok": report.passed, "text": text.rstrip()}

    def bounds(args: Args) -> Reply:
        report = summary_table(int(args["b"]), int(args["D"]))
        text = render_bounds_csv(report) if args.get("csv") else render_bounds_text(report)
        return {"ok": report.consistent(), "text": text.rstrip()}

    def count(args: Args) -> Reply:
        n, b, D = int(args["n"]), int(args["b"]), int(args["D"])
        caps = ctx.cfg.caps
        check = cross_check_counts(n, b, D, caps)
        lines = [
            f"linf={count_linf(n, b, D)} l1={count_l1(n, b, D, caps)} straight={count_straight(n, b, D)}",
            f"l1 lower estimate={count_l1_lower(n, b, D):.1f} offsets within L1 radius={golomb_welch_count(b, D)}",
            f"enumeration {'matches' if check.passed else 'DIFFERS'}: {check.counterexample or check.detail}",
        ]
        return {"ok": check.passed, "text": "\n".join(lines)}

    io_in = ArgumentSpec("input", "path", flags=("-i", "--input"), required=True, help="input word file (BW1)")
    out = ArgumentSpec("out", "path", flags=("-o", "--out"), help="output file")
    out_req = replace(out, required=True)
    csv_flag = ArgumentSpec("csv", "flag", False, flags=("--csv",), help="emit CSV instead of text")

    ##################
    m.def_command(
        "build",
        build,
        description="Build a code and print N, rows, rank and excess redundancy.",
        arguments=SPEC_ARGS + [
            replace(out, help="write the code spec to this file"),
            ArgumentSpec("design_out", "path", flags=("--design-out",), help="write the packing design"),
        ],
    )
    m.def_command(
        "encode",
        encode_cmd,
        description="Encode a message (random from --seed when omitted) into a word file.",
        arguments=SPEC_ARGS + [
            ArgumentSpec("message", "string", flags=("--message",), help="k bits as a 0/1 string"),
            out_req,
        ],
    )
    m.def_command(
        "corrupt",
        corrupt,
        description="Flip a uniformly sampled model error pattern.",
        arguments=SPEC_ARGS + [io_in, out_req],
    )
    m.def_command(
        "decode",
        decode_cmd,
        description="Decode a word file and print the outcome and the corrected word.",
        arguments=SPEC_ARGS + [io_in, out],
    )
    m.def_command(
        "verify",
        verify,
        description="Run the exhaustive verification suite on a code.",
        arguments=SPEC_ARGS + [
            csv_flag,
            ArgumentSpec("faults", "flag", False, flags=("--faults",), help="also run column fault injection"),
            out,
        ],
    )
    m.def_command(
        "bounds",
        bounds,
        description="Print the excess-redundancy summary table.",
        arguments=[
            ArgumentSpec("b", "int", flags=("-b",), required=True, help="burst size"),
            ArgumentSpec("D", "int", flags=("-D",), required=True, help="dimension"),
            csv_flag,
        ],
    )
    m.def_command(
        "count",
        count,
        description="Print the error-pattern counts of the three models.",
        arguments=[
            ArgumentSpec("n", "int", flags=("-n",), required=True, help="side length"),
            ArgumentSpec("b", "int", flags=("-b",), required=True, help="burst size"),
            ArgumentSpec("D", "int", flags=("-D",), required=True, help="dimension"),
        ],
    )
    return m


def command_names(module: Module) -> List[str]:
    return [c.name for c in module.commands]
