import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    # keep the universal-polynomial disk cache out of the real home directory
    monkeypatch.setenv("MZETA_CACHE_DIR", str(tmp_path / "cache"))
