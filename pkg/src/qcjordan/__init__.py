"""Exact cut-and-project quasicrystals over the golden field and their aperiodic Jordan algebras."""

from __future__ import annotations

__version__ = "0.1.0"
