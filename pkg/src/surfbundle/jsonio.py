"""JSON wire formats for curves, monodromies and extension results.

Loading errors are raised as SpecError with a dotted path to the bad field,
e.g. ``word[2].power``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import DimensionError, DomainError, SpecError
from .extension import ExtensionResult, pinch_homology_map
from .linalg import IntMatrix
from .mapping_class import MappingClass, TwistLetter, word_matrix
from .surface import CurveClass, Surface


def load_json_file(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"{path}: cannot read file ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f"{where}: expected an integer, got {value!r}")
    return value


def _field(obj: dict, key: str, where: str, required: bool = True):
    if not isinstance(obj, dict):
        raise SpecError(f"{where}: expected a JSON object")
    if key not in obj:
        if required:
            raise SpecError(f"{where}.{key}: missing required field")
        return None
    return obj[key]


def matrix_from_json(value: Any, where: str = "matrix") -> IntMatrix:
    if not isinstance(value, list) or not value:
        raise SpecError(f"{where}: expected a non-empty list of rows")
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise SpecError(f"{where}[{i}]: expected a list of integers")
        rows.append([_int(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    try:
        return IntMatrix.from_rows(rows)
    except DimensionError as exc:
        raise SpecError(f"{where}: {exc}") from exc


def curve_to_json(c: CurveClass) -> dict:
    return c.to_json()


def curve_from_json(surface: Surface, value: Any, where: str) -> CurveClass:
    try:
        if isinstance(value, str):
            return surface.named_curve(value)
        if isinstance(value, list):
            return CurveClass(surface, tuple(_int(x, f"{where}[{i}]") for i, x in enumerate(value)))
        if isinstance(value, dict):
            hom = _field(value, "homology", where)
            if not isinstance(hom, list):
                raise SpecError(f"{where}.homology: expected a list of integers")
            sep = value.get("separating", False)
            if not isinstance(sep, bool):
                raise SpecError(f"{where}.separating: expected true or false")
            label = value.get("label")
            return CurveClass(surface, tuple(_int(x, f"{where}.homology[{i}]") for i, x in enumerate(hom)),
                              separating=sep, label=label)
    except DomainError as exc:
        raise SpecError(f"{where}: {exc}") from exc
    raise SpecError(f"{where}: expected a generator name, an integer vector or a curve object")


def _letter_to_json(letter: TwistLetter) -> dict:
    c = letter.curve
    curve: Any = c.to_json()
    if c.label and not c.separating:
        try:
            if c.surface.named_curve(c.label).homology == c.homology:
                curve = c.label
        except DomainError:
            pass
    return {"curve": curve, "power": letter.power}


def mapping_class_to_json(f: MappingClass) -> dict:
    out: dict = {"genus": f.genus, "matrix": f.matrix.tolist()}
    if f.word is not None:
        out["word"] = [_letter_to_json(l) for l in f.word]
    return out


def mapping_class_from_json(obj: Any, where: str = "spec") -> MappingClass:
    """Load ``{"genus", "word"?, "matrix"?}``; at least one of word/matrix.

    When both are given the matrix must equal the product of the word.
    """
    genus = _int(_field(obj, "genus", where), f"{where}.genus")
    try:
        surface = Surface(genus)
    except DomainError as exc:
        raise SpecError(f"{where}.genus: {exc}") from exc
    raw_word = _field(obj, "word", where, required=False)
    raw_matrix = _field(obj, "matrix", where, required=False)
    if raw_word is None and raw_matrix is None:
        raise SpecError(f"{where}: give at least one of 'word' or 'matrix'")

    word = None
    if raw_word is not None:
        if not isinstance(raw_word, list):
            raise SpecError(f"{where}.word: expected a list of twist letters")
        word = []
        for i, item in enumerate(raw_word):
            w = f"{where}.word[{i}]"
            if isinstance(item, str):
                curve, power = curve_from_json(surface, item, f"{w}"), 1
            else:
                curve = curve_from_json(surface, _field(item, "curve", w), f"{w}.curve")
                power = _int(item.get("power", 1), f"{w}.power")
            try:
                word.append(TwistLetter(curve, power))
            except DomainError as exc:
                raise SpecError(f"{w}.power: {exc}") from exc
        word = tuple(word)

    if raw_matrix is not None:
        matrix = matrix_from_json(raw_matrix, f"{where}.matrix")
        if matrix.shape != (surface.rank, surface.rank):
            raise SpecError(f"{where}.matrix: expected {surface.rank}x{surface.rank} for genus {genus}, "
                            f"got {matrix.rows}x{matrix.cols}")
        if word is not None and word_matrix(surface, word) != matrix:
            raise SpecError(f"{where}: matrix disagrees with the product of the twist word")
    else:
        matrix = word_matrix(surface, word)
    return MappingClass(surface, matrix, word)


def extension_to_json(result: ExtensionResult, certificate=None) -> dict:
    out = {
        "g_t": result.g_t,
        "g_s": result.g_s,
        "variant": result.variant,
        "parameters": result.parameters,
        "a_block": result.a_block.tolist(),
        "f_t": mapping_class_to_json(result.f_t),
        "f_s": mapping_class_to_json(result.f_s),
    }
    if certificate is not None:
        out["certificate"] = certificate.to_json()
    return out


def extension_from_json(obj: Any, where: str = "extension") -> ExtensionResult:
    """Rebuild an ExtensionResult without re-running the construction.

    The stored certificate, if any, is ignored; callers re-verify.
    """
    f_t = mapping_class_from_json(_field(obj, "f_t", where), f"{where}.f_t")
    f_s = mapping_class_from_json(_field(obj, "f_s", where), f"{where}.f_s")
    for key, f in (("g_t", f_t), ("g_s", f_s)):
        stated = obj.get(key)
        if stated is not None and _int(stated, f"{where}.{key}") != f.genus:
            raise SpecError(f"{where}.{key}: says {stated} but the monodromy has genus {f.genus}")
    variant = _field(obj, "variant", where)
    if not isinstance(variant, str):
        raise SpecError(f"{where}.variant: expected a string")
    params = obj.get("parameters") or {}
    if not isinstance(params, dict):
        raise SpecError(f"{where}.parameters: expected an object")
    raw_a = obj.get("a_block")
    n_t = 2 * f_t.genus
    n_s = 2 * f_s.genus
    if raw_a is not None:
        a_block = matrix_from_json(raw_a, f"{where}.a_block")
    elif n_s > n_t:
        idx = list(range(n_t, n_s))
        a_block = f_s.matrix.submatrix(idx, idx)
    else:
        raise SpecError(f"{where}: extension genus must exceed target genus")
    try:
        pinch = pinch_homology_map(f_s.genus, f_t.genus)
    except DomainError as exc:
        raise SpecError(f"{where}: {exc}") from exc
    return ExtensionResult(f_t, f_s, pinch, a_block, variant, params)

