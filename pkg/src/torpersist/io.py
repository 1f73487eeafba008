"""JSON input formats for rings and modules, and canonical report output."""

from __future__ import annotations

import json
from pathlib import Path

from .field import Field
from .modules import PresentedModule, free_module, maximal_ideal, residue_field
from .ring import RingPresentation
from .series import _jsonnum

MODULE_KEYWORDS = ("R", "k", "m", "omega")


def _load(source) -> dict:
    if isinstance(source, dict):
        return source
    text = str(source)
    if text.lstrip().startswith("{"):
        return json.loads(text)
    return json.loads(Path(text).read_text())


def load_ring(source, characteristic: int | None = None) -> RingPresentation:
    """Ring from ``{field: {kind, p}, vars: [{name, weight}], relations: [str]}``."""
    data = _load(source)
    field = Field(characteristic) if characteristic is not None else None
    return RingPresentation.from_json(data, field)


def load_module(ring: RingPresentation, source) -> PresentedModule:
    """Module from ``{targets, sources, entries}`` (rows are targets) or one of ``R, k, m, omega``."""
    if isinstance(source, str) and source in MODULE_KEYWORDS:
        if source == "R":
            return free_module(ring)
        if source == "k":
            return residue_field(ring)
        if source == "m":
            return maximal_ideal(ring)
        return ring.canonical_module().present()
    return PresentedModule.from_json(ring, _load(source))


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1, default=_jsonnum) + "\n"


def write_text(path, text: str) -> None:
    Path(path).write_text(text)
