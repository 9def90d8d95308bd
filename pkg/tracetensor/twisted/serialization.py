import json

from tracetensor.twisted.element import TwistedElement


def dumps(a: TwistedElement, pretty: bool = False) -> str:
    """Canonical JSON text; equal elements give identical strings."""
    if pretty:
        return json.dumps(a.to_dict(), indent=2, sort_keys=True)
    return json.dumps(a.to_dict(), separators=(",", ":"), sort_keys=True)


def loads(text: str) -> TwistedElement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError("Invalid JSON: {}".format(e))
    return TwistedElement.from_dict(data)
