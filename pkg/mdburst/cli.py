from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from mdburst.commander.commands import CommandContext, build_command_module
from mdburst.core.config import read_config, with_overrides

log = logging.getLogger("mdburst")


def _parser(ctx: CommandContext):
    module = build_command_module(ctx)
    ap = argparse.ArgumentParser(
        prog="mdburst",
        description="Multidimensional 2-weight-limited burst-correcting codes: build, decode, verify, bound.",
    )
    ap.add_argument("--config", default=None, help="Path to config file (TOML).")
    ap.add_argument("--seed", type=int, default=None, help="Seed for every random choice (default 0).")
    ap.add_argument("--cap-cells", type=int, default=None, help="Largest side^D enumerated.")
    ap.add_argument("--cap-patterns", type=int, default=None, help="Largest error-pattern set enumerated.")
    ap.add_argument("--samples", type=int, default=None, help="Random codewords per decoder sweep.")
    ap.add_argument("--workers", type=int, default=None, help="Threads for decoder sweeps.")
    ap.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug.")
    module.add_subparsers(ap)
    return ap, module


def main(argv: Optional[List[str]] = None) -> int:
    """Exit 0 on success, 1 when a decode or check fails, 2 on bad input."""
    ctx = CommandContext()
    ap, module = _parser(ctx)
    args = vars(ap.parse_args(argv))

    try:
        cfg = read_config(args.pop("config"))
    except Exception as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    ctx.cfg = with_overrides(
        cfg,
        cap_cells=args.pop("cap_cells"),
        cap_patterns=args.pop("cap_patterns"),
        seed=args.pop("seed"),
        samples=args.pop("samples"),
        workers=args.pop("workers"),
    )

    verbose = args.pop("verbose")
    level = {0: ctx.cfg.log_level, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")

    command = args.pop("command")
    reply = module.execute(command, args)
    if "error" in reply:
        print(f"error: {reply['error']}", file=sys.stderr)
        return 2
    text = reply.get("text")
    if text:
        print(text)
    return 0 if reply.get("ok", True) else 1


if __name__ == "__main__":
    raise SystemExit(main())
