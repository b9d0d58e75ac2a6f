import argparse

import pytest

from artin_homology.config import (
    DEFAULT_SEED,
    FileConfig,
    Limits,
    RunConfig,
    build_run_config,
    load_config,
)


def test_load_config_parses_limits(tmp_path):
    config_file = tmp_path / "config.yaml"
    config_file.write_text("""
limits:
  max_cosets: 1000
  max_order: 32
seed: 7
format: json-lines
""")

    config = load_config(str(config_file))

    assert config.limits.max_cosets == 1000
    assert config.limits.max_order == 32
    assert config.limits.max_k == 12
    assert config.seed == 7
    assert config.fmt == "json-lines"


def test_load_config_substitutes_env_vars(tmp_path, monkeypatch):
    monkeypatch.setenv("TEST_MAX_ORDER", "48")

    config_file = tmp_path / "config.yaml"
    config_file.write_text("""
limits:
  max_order: ${TEST_MAX_ORDER}
""")

    config = load_config(str(config_file))

    assert config.limits.max_order == 48


def test_load_config_raises_on_missing_env_var(tmp_path):
    config_file = tmp_path / "config.yaml"
    config_file.write_text("""
seed: ${MISSING_SEED_VAR}
""")

    with pytest.raises(ValueError, match="MISSING_SEED_VAR"):
        load_config(str(config_file))


def test_load_config_empty_file_gives_defaults(tmp_path):
    config_file = tmp_path / "config.yaml"
    config_file.write_text("")

    config = load_config(str(config_file))

    assert config.limits == Limits()
    assert config.seed == DEFAULT_SEED
    assert config.fmt == "text"


def test_load_config_rejects_unknown_limit(tmp_path):
    config_file = tmp_path / "config.yaml"
    config_file.write_text("""
limits:
  max_widgets: 3
""")

    with pytest.raises(ValueError, match="max_widgets"):
        load_config(str(config_file))


def test_load_config_rejects_non_integer(tmp_path):
    config_file = tmp_path / "config.yaml"
    config_file.write_text("""
limits:
  max_k: lots
""")

    with pytest.raises(ValueError, match="limits.max_k"):
        load_config(str(config_file))


def test_limits_must_be_positive():
    with pytest.raises(ValueError, match="max_order"):
        Limits(max_order=0)


def test_run_config_rejects_unknown_format():
    with pytest.raises(ValueError, match="format"):
        RunConfig(command="h1", fmt="xml")


def test_run_config_rejects_unknown_group():
    with pytest.raises(ValueError, match="group"):
        RunConfig(command="h1", group="braid")


def test_read_matrix_text_prefers_inline(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("n=2; 1 2 4")

    assert RunConfig(command="h1", input_path=str(path)).read_matrix_text() == "n=2; 1 2 4"
    assert RunConfig(command="h1", input_path=str(path), matrix_text="n=1").read_matrix_text() == "n=1"
    assert RunConfig(command="h1").read_matrix_text() is None


def test_read_relator_text_needs_path():
    with pytest.raises(ValueError):
        RunConfig(command="class").read_relator_text()


def test_build_run_config_merges_over_file_defaults(monkeypatch):
    monkeypatch.delenv("PORT", raising=False)
    args = argparse.Namespace(command="verify", matrix="n=1", input=None, format=None,
                              seed=None, max_cosets=None, max_order=16, max_k=None)
    base = FileConfig(limits=Limits(max_cosets=100), seed=9, fmt="json-lines")

    cfg = build_run_config(args, base)

    assert cfg.limits == Limits(max_cosets=100, max_order=16)
    assert cfg.seed == 9
    assert cfg.fmt == "json-lines"
    assert cfg.port == 3000


def test_build_run_config_port_from_env(monkeypatch):
    monkeypatch.setenv("PORT", "8123")
    args = argparse.Namespace(command="serve", seed=3)

    cfg = build_run_config(args)

    assert cfg.port == 8123
    assert cfg.seed == 3
    assert cfg.host == "0.0.0.0"
