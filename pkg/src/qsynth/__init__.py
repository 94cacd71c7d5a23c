"""Quantum circuit synthesis workbench: circuits, ZX-diagrams, tableaux, routing."""

__version__ = "0.1.0"
