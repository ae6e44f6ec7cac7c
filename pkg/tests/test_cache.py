import json
import threading

from jackwhittaker import cache
from jackwhittaker.exactmath import b_symbol
from jackwhittaker.jack import _jack_table, jack_table
from jackwhittaker.symfunc import m_to_p_table, p_to_m_table


def _clear_memory():
    _jack_table.cache_clear()
    p_to_m_table.cache_clear()
    m_to_p_table.cache_clear()


def test_store_and_load(tmp_path):
    cache.set_cache_dir(tmp_path)
    key = {"degree": 3, "x": "1/2"}
    assert cache.load("demo", key) is None
    cache.store("demo", key, {"rows": [["1/2", "3"]]})
    assert cache.load("demo", key) == {"rows": [["1/2", "3"]]}
    record = json.loads(next((tmp_path / "demo").glob("*.json")).read_text())
    assert record["format_version"] == 1 and record["kind"] == "demo" and len(record["sha256"]) == 64
    assert not list((tmp_path / "demo").glob("*.tmp"))


def test_corrupt_file_is_ignored(tmp_path):
    cache.set_cache_dir(tmp_path)
    key = {"k": 1}
    cache.store("demo", key, [1, 2, 3])
    path = next((tmp_path / "demo").glob("*.json"))
    record = json.loads(path.read_text())
    record["payload"] = [1, 2, 4]
    path.write_text(json.dumps(record))
    assert cache.load("demo", key) is None
    path.write_text("{not json")
    assert cache.load("demo", key) is None


def test_disabled_by_default(tmp_path, monkeypatch):
    monkeypatch.setattr(cache, "_cache_dir", cache._UNSET)
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    assert cache.get_cache_dir() is None
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert cache.get_cache_dir() == tmp_path


def test_cold_and_warm_tables_agree(tmp_path):
    b = b_symbol()
    _clear_memory()
    cold = jack_table(5, b)
    cache.set_cache_dir(tmp_path)
    _clear_memory()
    built = jack_table(5, b)
    assert cache.inspect()["kinds"]["jack"]["entries"] >= 1
    _clear_memory()
    warm = jack_table(5, b)
    for t in (built, warm):
        assert t.in_monomial == cold.in_monomial
        assert t.in_power_sum == cold.in_power_sum
        assert t.norms == cold.norms
    assert p_to_m_table(5) == p_to_m_table.__wrapped__(5)
    _clear_memory()


def test_inspect_and_clear(tmp_path):
    cache.set_cache_dir(tmp_path)
    cache.store("a", {"i": 1}, 1)
    cache.store("a", {"i": 2}, 2)
    cache.store("b", {"i": 1}, 3)
    info = cache.inspect()
    assert info["kinds"]["a"]["entries"] == 2 and info["kinds"]["b"]["entries"] == 1
    assert cache.clear() == 3
    assert cache.load("a", {"i": 1}) is None


def test_concurrent_writers(tmp_path):
    cache.set_cache_dir(tmp_path)
    key = {"shared": True}

    def work(i):
        cache.store("race", key, {"value": "same"})
        assert cache.load("race", key) in (None, {"value": "same"})

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert cache.load("race", key) == {"value": "same"}
