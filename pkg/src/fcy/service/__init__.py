"""HTTP service and in-process handlers behind the command line."""
from .handlers import COMMANDS, dispatch

__all__ = ["COMMANDS", "dispatch"]
