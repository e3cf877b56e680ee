from pathlib import Path

from milnor_skein.diagram import parse_events, parse_gauss

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


def load(name: str):
    text = (FIXTURES / name).read_text()
    return parse_events(text) if name.endswith(".events.json") else parse_gauss(text)
