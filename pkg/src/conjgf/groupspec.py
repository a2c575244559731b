"""Group-spec documents: one JSON object per file describing a group to build.

Schema (unknown fields are rejected):

  {"kind": "permutation", "generators": [[1,2,0], ...], "label": "..."}
      Each generator is the image array of a bijection on 0..k-1.

  {"kind": "cayley", "table": [[0,1],[1,0]], "label": "..."}
      A full multiplication table over element indices; identity at index 0.

  {"kind": "pcp", "p": 3, "relative_orders": [3,3,3],
   "power_words": [null, [0,0,1], null],
   "commutators": [{"left": 1, "right": 0, "word": [0,0,2]}],
   "label": "..."}
      Words are normal-form exponent vectors over the generators (0-based);
      a commutator entry gives [g_left, g_right] for left > right.

  {"kind": "family", "name": "Phi5", "p": 3}
      Catalog families: abelian (p = any order), Phi2..Phi10 (p odd prime),
      Gamma2..Gamma8 (p = 2).  Named families reuse the p slot as their size
      parameter: cyclic/dihedral/semidihedral/quaternion (order),
      symmetric (degree), elementary_abelian (prime-power order).
"""

from __future__ import annotations

import json
from pathlib import Path

from . import families
from .errors import GroupSpecError
from .groups import GroupTable, build_from_cayley, build_from_permutations
from .pcp import PcPresentation, build_from_pcp

_NAMED_FAMILIES = (
    "cyclic",
    "dihedral",
    "semidihedral",
    "quaternion",
    "symmetric",
    "elementary_abelian",
)


def _require_fields(doc: dict, required: set[str], optional: set[str]) -> None:
    missing = required - doc.keys()
    if missing:
        raise GroupSpecError(f"missing fields: {sorted(missing)}")
    unknown = doc.keys() - required - optional
    if unknown:
        raise GroupSpecError(f"unknown fields: {sorted(unknown)}")


def group_from_spec(doc: dict) -> GroupTable:
    """Build a group from a parsed group-spec document."""
    if not isinstance(doc, dict):
        raise GroupSpecError("group spec must be a JSON object")
    kind = doc.get("kind")
    if kind == "permutation":
        _require_fields(doc, {"kind", "generators"}, {"label"})
        gens = doc["generators"]
        if not isinstance(gens, list) or not all(isinstance(p, list) for p in gens):
            raise GroupSpecError("generators must be a list of image arrays")
        return build_from_permutations(gens, label=doc.get("label", ""))
    if kind == "cayley":
        _require_fields(doc, {"kind", "table"}, {"label"})
        return build_from_cayley(doc["table"], label=doc.get("label", ""))
    if kind == "pcp":
        _require_fields(
            doc, {"kind", "p", "relative_orders", "power_words", "commutators"}, {"label"}
        )
        words = doc["power_words"]
        if not isinstance(words, list) or len(words) != len(doc["relative_orders"]):
            raise GroupSpecError("power_words must list one entry (or null) per generator")
        comms = {}
        for entry in doc["commutators"]:
            if not isinstance(entry, dict):
                raise GroupSpecError("commutators must be objects")
            _require_fields(entry, {"left", "right", "word"}, set())
            comms[(int(entry["left"]), int(entry["right"]))] = tuple(entry["word"])
        pres = PcPresentation(
            p=int(doc["p"]),
            relative_orders=tuple(int(r) for r in doc["relative_orders"]),
            power_words=tuple(None if w is None else tuple(w) for w in words),
            commutator_words=comms,
            label=doc.get("label", ""),
        )
        return build_from_pcp(pres)
    if kind == "family":
        # family groups are cached and keep their catalog labels
        _require_fields(doc, {"kind", "name", "p"}, set())
        name = doc["name"]
        p = int(doc["p"])
        if name in _NAMED_FAMILIES:
            return families.named_group(name, p)
        return families.stem_group(name, p)
    raise GroupSpecError(f"unknown kind {kind!r}")


def load_group_spec(path: str | Path) -> GroupTable:
    """Parse a group-spec file and build its group."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GroupSpecError(f"{path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupSpecError(f"{path}: not valid JSON: {exc}") from exc
    try:
        return group_from_spec(doc)
    except GroupSpecError as exc:
        raise GroupSpecError(f"{path}: {exc}") from exc
