import json

from zinbiel_lab.config import Config, get_config_dir
from zinbiel_lab.spectra import DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_STEPS


def test_defaults_without_a_file(isolated_config):
    config = Config.load()
    assert not isolated_config.exists()
    assert config.seed == DEFAULT_SEED
    assert config.candidate_samples == DEFAULT_SAMPLES
    assert config.get_steps() == DEFAULT_STEPS
    assert config.json_indent is None and config.verbose is False


def test_config_dir_follows_environment(isolated_config):
    assert get_config_dir() == isolated_config.parent
    assert isolated_config.parent.is_dir()


def test_save_then_load(isolated_config):
    Config(seed=3, family_samples=2, candidate_steps=["1", "1/3"], json_indent=4).save()
    assert json.loads(isolated_config.read_text(encoding="utf-8"))["seed"] == 3
    loaded = Config.load()
    assert loaded == Config(seed=3, family_samples=2, candidate_steps=["1", "1/3"], json_indent=4)


def test_unknown_keys_are_ignored(isolated_config):
    isolated_config.parent.mkdir(parents=True, exist_ok=True)
    isolated_config.write_text(json.dumps({"seed": 9, "theme": "dark"}), encoding="utf-8")
    config = Config.load()
    assert config.seed == 9
    assert not hasattr(config, "theme")


def test_unreadable_file_falls_back_to_defaults(isolated_config, capsys):
    isolated_config.parent.mkdir(parents=True, exist_ok=True)
    isolated_config.write_text("{broken", encoding="utf-8")
    assert Config.load() == Config()
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "Could not load config" in captured.err


def test_explicit_path(tmp_path):
    path = tmp_path / "elsewhere" / "lab.json"
    Config(crossval_samples=10).save(path)
    assert Config.load(path).crossval_samples == 10


def test_blank_steps_are_dropped():
    assert Config(candidate_steps=["1", " ", "", "-1"]).get_steps() == ("1", "-1")
