"""JSONL certificate cache behavior."""

import logging

from schurgrid.certificates import ENGINE_VERSION
from schurgrid.grid import GridDims
from schurgrid.search import exists_rainbow_free
from schurgrid.store import cache_get, cache_put


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "certs.jsonl"
    cert = exists_rainbow_free(GridDims(2, 3), 4)
    cache_put(cert, path)
    got = cache_get(GridDims(2, 3), 4, ENGINE_VERSION, path)
    assert got == cert


def test_cache_miss_on_key_mismatch(tmp_path):
    path = tmp_path / "certs.jsonl"
    cert = exists_rainbow_free(GridDims(2, 3), 4)
    cache_put(cert, path)
    assert cache_get(GridDims(2, 3), 5, ENGINE_VERSION, path) is None
    assert cache_get(GridDims(2, 4), 4, ENGINE_VERSION, path) is None
    # a stale engine version never matches, forcing recomputation
    assert cache_get(GridDims(2, 3), 4, "schurgrid-0.0.9", path) is None


def test_cache_skips_corrupt_lines(tmp_path, caplog):
    path = tmp_path / "certs.jsonl"
    cert = exists_rainbow_free(GridDims(2, 3), 4)
    cache_put(cert, path)
    with open(path, "a") as fh:
        fh.write("{not json\n")
    other = exists_rainbow_free(GridDims(2, 2), 3)
    cache_put(other, path)
    with caplog.at_level(logging.WARNING, logger="schurgrid.store"):
        assert cache_get(GridDims(2, 2), 3, ENGINE_VERSION, path) == other
    assert any("corrupt" in rec.message for rec in caplog.records)


def test_cache_later_lines_win(tmp_path):
    path = tmp_path / "certs.jsonl"
    cert = exists_rainbow_free(GridDims(2, 3), 4)
    cache_put(cert, path)
    newer = type(cert)(cert.kind, cert.dims, cert.r, cert.coloring, 999, cert.engine)
    cache_put(newer, path)
    got = cache_get(GridDims(2, 3), 4, ENGINE_VERSION, path)
    assert got.nodes == 999


def test_cache_get_missing_file(tmp_path):
    assert cache_get(GridDims(2, 2), 3, ENGINE_VERSION, tmp_path / "nope.jsonl") is None
