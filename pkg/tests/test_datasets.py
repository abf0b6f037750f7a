"""Dataset persistence: round-trip, checksums, schema validation, extension."""

import dataclasses

import pytest

from zetasums.datasets import (
    cache_dir,
    cached_dataset,
    extend_dataset,
    load_dataset,
    save_dataset,
)
from zetasums.errors import ChecksumError, SchemaError
from zetasums.special import FunctionId
from zetasums.zeros import scan_zeros, with_real_axis_records


@pytest.fixture(scope="module")
def small_ds():
    ds = scan_zeros(FunctionId.T_MINUS, 0.0, 60.0)
    return with_real_axis_records(ds)


def test_round_trip(tmp_path, small_ds):
    path = tmp_path / "tm.csv"
    save_dataset(small_ds, path)
    back = load_dataset(path)
    assert back.function is small_ds.function
    assert back.t_max_scanned == small_ds.t_max_scanned
    assert len(back.records) == len(small_ds.records)
    for a, b in zip(back.records, small_ds.records):
        assert a.t_or_x == b.t_or_x  # exact: repr round-trips binary floats
        assert a.location_kind == b.location_kind


def test_checksum_tamper(tmp_path, small_ds):
    path = tmp_path / "tm.csv"
    save_dataset(small_ds, path)
    text = path.read_text()
    path.write_text(text.replace("7.66", "7.67", 1))
    with pytest.raises(ChecksumError):
        load_dataset(path)


def test_missing_manifest(tmp_path, small_ds):
    path = tmp_path / "tm.csv"
    save_dataset(small_ds, path)
    path.with_suffix(".csv.manifest.json").unlink()
    with pytest.raises(SchemaError):
        load_dataset(path)


def test_extend_noop_at_same_height(small_ds):
    same = extend_dataset(small_ds, small_ds.t_max_scanned)
    assert len(same.records) == len(small_ds.records)


def test_extend_matches_fresh_scan(small_ds):
    extended = extend_dataset(small_ds, 80.0)
    fresh = with_real_axis_records(scan_zeros(FunctionId.T_MINUS, 0.0, 80.0))
    assert len(extended.records) == len(fresh.records)
    for a, b in zip(extended.ordinates(), fresh.ordinates()):
        assert a == pytest.approx(b, abs=1e-10)


def test_cache_dir_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("ZETASUMS_CACHE_DIR", str(tmp_path / "cachetest"))
    assert str(cache_dir()) == str(tmp_path / "cachetest")
    ds = cached_dataset(FunctionId.XI, 30.0)
    assert len(ds.records) == 3  # zeros at 14.13, 21.02, 25.01
    # two calls hit the same file and agree exactly
    ds2 = cached_dataset(FunctionId.XI, 30.0)
    assert [r.t_or_x for r in ds.records] == [r.t_or_x for r in ds2.records]
