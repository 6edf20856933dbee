"""Order-ideal lattices of grids: antichain modules, their homs, and the
comparison with higher Auslander algebras of type A."""

SCHEMA = "fcy/1"

__version__ = "0.1.0"
