import pytest
from pydantic import ValidationError

from qres.core.config import Settings, settings


class TestSettings:
    def test_defaults(self):
        assert settings.APP_NAME == "qres"
        assert settings.MAX_BLOWUPS >= 1
        assert settings.DOT_RANKDIR in ("LR", "TB")

    def test_normalizes_values(self):
        custom = Settings(ENVIRONMENT=" Testing ", LOG_LEVEL="debug", DOT_RANKDIR="tb")
        assert (custom.ENVIRONMENT, custom.LOG_LEVEL, custom.DOT_RANKDIR) == ("testing", "DEBUG", "TB")
        assert custom.log_level_number == 10

    @pytest.mark.parametrize(
        "overrides",
        [
            {"ENVIRONMENT": "staging"},
            {"LOG_LEVEL": "chatty"},
            {"DOT_RANKDIR": "RL"},
            {"MAX_BLOWUPS": 0},
            {"ENVIRONMENT": "production", "DEBUG": True},
        ],
    )
    def test_rejects(self, overrides):
        with pytest.raises(ValidationError):
            Settings(**overrides)

    def test_environment_variable(self, monkeypatch):
        monkeypatch.setenv("MAX_BLOWUPS", "12")
        assert Settings().MAX_BLOWUPS == 12
