import logging

import pytest

from config import LOG_FILE, MAX_TERMS, THREADS, Config
from logging_config import setup_logging


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("MEETDET_THREADS", "MEETDET_MAX_TERMS", "MEETDET_LOG_FILE"):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


class TestConfig:
    def test_defaults(self, clean_env):
        config = Config.from_env().validate()
        assert config.threads == THREADS
        assert config.max_terms == MAX_TERMS
        assert config.log_file == LOG_FILE

    def test_environment_overrides(self, clean_env):
        clean_env.setenv("MEETDET_THREADS", "4")
        clean_env.setenv("MEETDET_MAX_TERMS", "1000")
        clean_env.setenv("MEETDET_LOG_FILE", "/tmp/meetdet-test.log")
        config = Config.from_env()
        assert (config.threads, config.max_terms) == (4, 1000)
        assert config.log_file == "/tmp/meetdet-test.log"

    def test_non_integer(self, clean_env):
        clean_env.setenv("MEETDET_THREADS", "many")
        with pytest.raises(ValueError, match="must be integers"):
            Config.from_env()

    @pytest.mark.parametrize(
        ("threads", "max_terms", "log_file"),
        [(0, 10, "x.log"), (1, 0, "x.log"), (1, 10, "")],
    )
    def test_validation(self, threads, max_terms, log_file):
        with pytest.raises(ValueError):
            Config(threads, max_terms, log_file).validate()


class TestLogging:
    def test_creates_log_directory(self, tmp_path):
        log_file = tmp_path / "nested" / "meetdet.log"
        setup_logging(debug=True, log_file=str(log_file))
        logging.getLogger("meetdet.test").debug("written at debug level")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "written at debug level" in log_file.read_text()
        assert logging.getLogger().level == logging.DEBUG

    def test_default_level(self, tmp_path):
        setup_logging(log_file=str(tmp_path / "meetdet.log"))
        assert logging.getLogger().level == logging.INFO
