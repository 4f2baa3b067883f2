from __future__ import annotations

import argparse
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

Json = Union[None, bool, int, float, str, List["Json"], dict]
Reply = Dict[str, Json]

log = logging.getLogger(__name__)

_TYPES: Dict[str, Callable[[str], Json]] = {"int": int, "string": str, "path": str}


@dataclass
class ArgumentSpec:
    name: str
    type: str
    default_value: Optional[Json] = None
    flags: Tuple[str, ...] = ()
    help: str = ""
    choices: Optional[Sequence[str]] = None
    required: bool = False


@dataclass
class CommandSpec:
    name: str
    description: str = ""
    arguments: List[ArgumentSpec] = field(default_factory=list)
    return_type: Json = "object"


class Module:
    def __init__(self) -> None:
        self._specs: Dict[str, CommandSpec] = {}
        self._fns: Dict[str, Callable[[Dict[str, Json]], Reply]] = {}

    def def_command(
        self,
        name: str,
        fn: Callable[[Dict[str, Json]], Reply],
        *,
        description: str = "",
        arguments: Optional[List[ArgumentSpec]] = None,
        return_type: Json = "object",
    ) -> None:
        self._specs[name] = CommandSpec(
            name=name,
            description=description or "",
            arguments=arguments or [],
            return_type=return_type,
        )
        self._fns[name] = fn

    @property
    def commands(self) -> List[CommandSpec]:
        return list(self._specs.values())

    def execute(self, name: str, args: Optional[Dict[str, Json]] = None) -> Reply:
        if name not in self._fns:
            return {"error": f"Command '{name}' not found."}
        if args is None:
            args = {}
        if not isinstance(args, dict):
            return {"error": "Arguments must be a mapping."}
        merged = {a.name: a.default_value for a in self._specs[name].arguments}
        merged.update({k: v for k, v in args.items() if v is not None})
        try:
            return self._fns[name](merged)
        except Exception as e:
            log.debug("command %s failed", name, exc_info=True)
            return {"error": str(e), "kind": type(e).__name__}

    def add_subparsers(self, parser: argparse.ArgumentParser) -> None:
        """One argparse subcommand per registered command, flags taken from its ArgumentSpecs."""
        sub = parser.add_subparsers(dest="command", required=True)
        for spec in self._specs.values():
            p = sub.add_parser(spec.name, help=spec.description, description=spec.description)
            for a in spec.arguments:
                flags = a.flags or (f"--{a.name.replace('_', '-')}",)
                if a.type == "flag":
                    p.add_argument(*flags, dest=a.name, action="store_true", help=a.help)
                    continue
                p.add_argument(
                    *flags,
                    dest=a.name,
                    type=_TYPES[a.type],
                    default=None,
                    choices=a.choices,
                    required=a.required,
                    help=a.help + (f" (default: {a.default_value})" if a.default_value is not None else ""),
                )
