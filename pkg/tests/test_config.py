from atomic.config import Settings, get_settings, load_project_dotenv


def test_settings_read_environment(monkeypatch):
    monkeypatch.setenv("ATOMIC_ORBIT_CAP", "1234")
    monkeypatch.setenv("ATOMIC_LOG_LEVEL", "DEBUG")
    settings = get_settings()
    assert settings.orbit_cap == 1234
    assert settings.log_level == "DEBUG"


def test_settings_defaults(monkeypatch):
    for name in ("ATOMIC_ORBIT_CAP", "ATOMIC_RADIUS_CAP", "ATOMIC_CORE_SIZE_CAP"):
        monkeypatch.delenv(name, raising=False)
    settings = Settings()
    assert settings.orbit_cap == 2**27
    assert settings.radius_cap == 400
    assert settings.core_size_cap == 2000


def test_dotenv_file_does_not_override_the_environment(tmp_path, monkeypatch):
    env_file = tmp_path / ".env"
    env_file.write_text("ATOMIC_RADIUS_CAP=17\nATOMIC_CORE_SIZE_CAP=99\n")
    monkeypatch.setenv("ATOMIC_CORE_SIZE_CAP", "55")
    monkeypatch.setenv("ATOMIC_RADIUS_CAP", "0")
    monkeypatch.delenv("ATOMIC_RADIUS_CAP")
    assert load_project_dotenv(env_file)
    settings = get_settings()
    assert settings.radius_cap == 17
    assert settings.core_size_cap == 55
