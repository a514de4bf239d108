"""Reading and writing algebra definition files (.alg).

An .alg file is a JSON document.  Coefficients are exact: integers or
rational strings "p/q".  Floating-point literals are rejected outright.

Structure-constants style::

    {
      "name": "heisenberg-cone",
      "style": "structure-constants",
      "generators": [{"name": "x", "degree": 0}, ...],
      "brackets": [{"left": "x", "right": "y", "result": {"z": 1}}, ...],
      "differential": {"u": {"x": 1}},
      "nilpotency_class": 2
    }

Free style replaces "brackets"/"nilpotency_class" with "truncation" and
gives each differential value as a formula in Lyndon-bracket keys is not
supported; free-style differentials must be linear combinations of
generators (enough for every bundled example).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import (
    FreePresentation,
    Generator,
    Presentation,
    StructureConstantsPresentation,
)
from .errors import PresentationError


def parse_scalar(value: Any, where: str) -> Fraction:
    """Exact coefficient: int, or string "p/q" / "p".  Floats refused."""
    if isinstance(value, bool):
        raise PresentationError("%s: boolean is not a coefficient" % where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise PresentationError(
            "%s: floating-point literal %r not accepted; write an exact rational string \"p/q\""
            % (where, value)
        )
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise PresentationError("%s: bad rational %r (%s)" % (where, value, exc))
    raise PresentationError("%s: unsupported coefficient %r" % (where, value))


def _parse_combination(mapping: Any, where: str) -> dict[str, Fraction]:
    if not isinstance(mapping, dict):
        raise PresentationError("%s: expected an object of name -> coefficient" % where)
    return {
        str(name): parse_scalar(c, "%s[%s]" % (where, name)) for name, c in mapping.items()
    }


def presentation_from_dict(doc: dict) -> Presentation:
    if not isinstance(doc, dict):
        raise PresentationError("algebra file must be a JSON object")
    style = doc.get("style", "structure-constants")
    name = str(doc.get("name", ""))
    raw_gens = doc.get("generators")
    if not isinstance(raw_gens, list) or not raw_gens:
        raise PresentationError("algebra file needs a non-empty \"generators\" list")
    gens = []
    for g in raw_gens:
        if not isinstance(g, dict) or "name" not in g or "degree" not in g:
            raise PresentationError("each generator needs \"name\" and \"degree\"")
        if not isinstance(g["degree"], int) or isinstance(g["degree"], bool):
            raise PresentationError("generator %r: degree must be an integer" % g.get("name"))
        gens.append(Generator(str(g["name"]), g["degree"]))

    differential = {
        str(n): _parse_combination(v, "differential[%s]" % n)
        for n, v in (doc.get("differential") or {}).items()
    }

    if style == "structure-constants":
        brackets: dict[tuple[str, str], dict[str, Fraction]] = {}
        for entry in doc.get("brackets") or []:
            if not isinstance(entry, dict) or not {"left", "right", "result"} <= set(entry):
                raise PresentationError("each bracket entry needs left, right, result")
            key = (str(entry["left"]), str(entry["right"]))
            if key in brackets:
                raise PresentationError("duplicate bracket entry for %r" % (key,))
            brackets[key] = _parse_combination(entry["result"], "bracket%r" % (key,))
        ncls = doc.get("nilpotency_class")
        if ncls is not None and (not isinstance(ncls, int) or isinstance(ncls, bool) or ncls < 1):
            raise PresentationError("nilpotency_class must be a positive integer")
        return StructureConstantsPresentation(
            gens, brackets, differential, nilpotency_class=ncls, name=name
        )

    if style == "free-truncated":
        truncation = doc.get("truncation")
        if not isinstance(truncation, int) or isinstance(truncation, bool) or truncation < 1:
            raise PresentationError("free-truncated style needs a positive integer \"truncation\"")
        p = FreePresentation(gens, truncation=truncation)
        diffs = {}
        for gname, combo in differential.items():
            value = p.zero()
            for other, c in combo.items():
                value = value + p.gen(other).scale(c)
            diffs[gname] = value
        p.set_differential(diffs)
        p.name = name
        return p

    raise PresentationError("unknown style %r" % style)


def load_presentation(path: str) -> Presentation:
    try:
        with open(path) as fh:
            doc = json.load(
                fh,
                parse_float=lambda s: (_ for _ in ()).throw(
                    PresentationError("floating-point literal %r not accepted" % s)
                ),
            )
    except OSError as exc:
        raise PresentationError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise PresentationError("%s: invalid JSON at line %d: %s" % (path, exc.lineno, exc.msg))
    return presentation_from_dict(doc)


def presentation_to_dict(p: Presentation) -> dict:
    """Serialize a presentation back to the .alg dictionary shape."""
    doc: dict = {
        "name": getattr(p, "name", ""),
        "style": p.style,
        "generators": [{"name": g.name, "degree": g.degree} for g in p.generators],
    }
    if p.style == "structure-constants":
        entries = []
        for (i, j), row in sorted(p.table.items()):
            if i > j:
                continue
            result = {
                p.generators[t].name: _scalar_out(c) for t, c in sorted(row.items()) if c
            }
            if result:
                entries.append(
                    {
                        "left": p.generators[i].name,
                        "right": p.generators[j].name,
                        "result": result,
                    }
                )
        doc["brackets"] = entries
        diff = {}
        for i, g in enumerate(p.generators):
            row = {
                p.generators[t].name: _scalar_out(c)
                for t, c in sorted(p.diff.get(i, {}).items())
                if c
            }
            if row:
                diff[g.name] = row
        doc["differential"] = diff
        if p.claimed_class is not None:
            doc["nilpotency_class"] = p.claimed_class
    else:
        raise PresentationError("serializing free-style presentations is not supported")
    return doc


def _scalar_out(c: Fraction):
    return int(c) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


BUNDLED = ("abelian", "heisenberg-cone", "free-nilpotent-cone", "two-type")


def bundled_path(name: str) -> str:
    """Filesystem path of a bundled example algebra file."""
    from importlib.resources import files

    resource = files("cdgl.data") / ("%s.alg" % name)
    if not resource.is_file():
        raise PresentationError(
            "no bundled algebra %r (have: %s)" % (name, ", ".join(BUNDLED))
        )
    return str(resource)


def load_bundled(name: str) -> Presentation:
    return load_presentation(bundled_path(name))


def save_presentation(p: Presentation, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(presentation_to_dict(p), fh, indent=2, sort_keys=False)
        fh.write("\n")
