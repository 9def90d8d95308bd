import json
import sys


def dumps_json(obj, pretty=False):
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"
    return json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n"


def read_json(path):
    """Load JSON from ``path``; ``"-"`` reads standard input."""
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r") as f:
        return json.load(f)


def write_json(obj, path=None, pretty=False):
    """Write ``obj`` deterministically to ``path`` (stdout if None or ``"-"``)."""
    text = dumps_json(obj, pretty=pretty)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)
