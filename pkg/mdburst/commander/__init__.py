from mdburst.commander.commands import CommandContext, build_command_module
from mdburst.commander.module import ArgumentSpec, CommandSpec, Module

__all__ = ["ArgumentSpec", "CommandContext", "CommandSpec", "Module", "build_command_module"]
