"""On-disk cache for irreducible lists and discrete-log tables.

Entries are keyed by a content hash of the field description, so a
cache directory can be shared between sweeps over the same fields.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

import numpy as np

from .field import BaseField, ExtField, Xelt
from .primary import enumerate_irreducibles
from .spectrum import LogTable, build_log_table

ENV_VAR = "CAYLEYFF_CACHE"


def _key(*parts) -> str:
    return hashlib.sha256(json.dumps(parts, sort_keys=True).encode()).hexdigest()[:24]


class DiskCache:
    def __init__(self, root: str | os.PathLike | None):
        self.root = Path(root) if root else None
        if self.root is not None:
            self.root.mkdir(parents=True, exist_ok=True)

    @classmethod
    def from_env(cls, override: str | None = None) -> DiskCache:
        return cls(override or os.environ.get(ENV_VAR))

    def irreducibles(self, base: BaseField, k: int) -> list[tuple]:
        if self.root is None:
            return enumerate_irreducibles(base, k)
        path = self.root / f"irr-{_key(base.p, base.m, list(base.modulus), k)}.json"
        if path.exists():
            return [tuple(f) for f in json.loads(path.read_text())]
        fs = enumerate_irreducibles(base, k)
        path.write_text(json.dumps([list(f) for f in fs]))
        return fs

    def log_table(self, ext: ExtField, gamma: Xelt) -> LogTable:
        if self.root is None:
            return build_log_table(ext, gamma)
        b = ext.base
        path = self.root / f"log-{_key(b.p, b.m, list(b.modulus), list(ext.f), list(gamma.c))}.npy"
        if path.exists():
            return LogTable(gamma, np.load(path))
        table = build_log_table(ext, gamma)
        np.save(path, table.logs)
        return table
