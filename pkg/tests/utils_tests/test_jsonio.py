import io
import json

from tracetensor.utils.jsonio import dumps_json
from tracetensor.utils.jsonio import read_json
from tracetensor.utils.jsonio import write_json


def test_dumps_json_is_canonical():
    a = dumps_json({"b": [1, 2], "a": "x"})
    b = dumps_json({"a": "x", "b": [1, 2]})
    assert a == b == '{"a":"x","b":[1,2]}\n'


def test_dumps_json_pretty():
    text = dumps_json({"b": 1, "a": 2}, pretty=True)
    assert text.startswith('{\n  "a": 2')
    assert json.loads(text) == {"a": 2, "b": 1}


def test_write_and_read(tmp_path):
    path = str(tmp_path / "out.json")
    write_json({"n": 2, "terms": []}, path)
    assert read_json(path) == {"n": 2, "terms": []}


def test_write_stdout(capsys):
    write_json([1, 2])
    write_json([3], "-")
    assert capsys.readouterr().out == "[1,2]\n[3]\n"


def test_read_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"m": 3}'))
    assert read_json("-") == {"m": 3}
