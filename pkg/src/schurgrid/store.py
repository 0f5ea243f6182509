"""Append-only JSONL certificate cache.

One certificate per line, keyed by (m, n, r, engine). Later lines win.
Writers take an advisory lock so concurrent CLI runs do not interleave
partial lines; readers skip lines that fail to parse instead of dying.
"""

from __future__ import annotations

import fcntl
import json
import logging
import os
from pathlib import Path
from typing import Optional

from .certificates import Certificate
from .grid import GridDims

log = logging.getLogger(__name__)

DEFAULT_CACHE_PATH = Path(os.environ.get("SCHURGRID_CACHE", "~/.schurgrid/certs.jsonl"))


def _load(path: Path) -> dict[tuple[int, int, int, str], Certificate]:
    out: dict[tuple[int, int, int, str], Certificate] = {}
    try:
        lines = path.expanduser().read_text().splitlines()
    except FileNotFoundError:
        return out
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            cert = Certificate.from_json(line)
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            log.warning("skipping corrupt cache line %s:%d (%s)", path, lineno, exc)
            continue
        out[(cert.dims.m, cert.dims.n, cert.r, cert.engine)] = cert
    return out


def cache_get(
    dims: GridDims, r: int, engine: str, path: Optional[Path] = None
) -> Optional[Certificate]:
    path = path or DEFAULT_CACHE_PATH
    return _load(path).get((dims.m, dims.n, r, engine))


def cache_put(cert: Certificate, path: Optional[Path] = None) -> None:
    path = (path or DEFAULT_CACHE_PATH).expanduser()
    path.parent.mkdir(parents=True, exist_ok=True)
    line = cert.to_json() + "\n"
    with open(path, "a") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        try:
            fh.write(line)
            fh.flush()
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)
