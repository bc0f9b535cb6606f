import pytest


@pytest.fixture(autouse=True)
def isolated_cache_dir(tmp_path, monkeypatch):
    """Keep every test's disk cache in its own temp directory."""
    monkeypatch.setenv("POWCOV_CACHE_DIR", str(tmp_path / "cache"))
    yield
