"""Canonical text and JSON forms.

Text: terms in canonical order (degree, length, lexicographic), coefficients
1/-1 elided, adjacent equal letters compressed to powers, e.g.

    -a3 + 2 a1 a2 + 3 a2 a1 - 5 a1^3

JSON: letters are ``[index, tag]`` pairs, coefficients decimal-free rational
strings; a rank-1 element uses ``"word"``, higher ranks ``"words"``.  Tree
tensors carry tree strings as letters, block tensors carry flat integer
lists.  Everything round-trips through the parsers in this module, and the
emitted order is the canonical one, so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .freealg import NCPoly, TensorElement, WordKey
from .series import FormalCoefficients, Matrix, MatrixAlgebra, Rationals, TruncatedSeries
from .trees import ForestTensor, TreeTensor, parse_tree, tree_to_string
from .doubletensor import BlockTensor


def coeff_str(c) -> str:
    return str(Fraction(c))


def parse_coeff(s: str) -> Fraction:
    return Fraction(s)


# -- text ---------------------------------------------------------------


def word_text(w: WordKey, symbol: str = "a") -> str:
    if not w:
        return "1"
    parts: list[str] = []
    run_letter = None
    run = 0

    def flush() -> None:
        if run_letter is None:
            return
        i, tag = run_letter
        base = f"{symbol}{i}" if tag == 1 else f"{symbol}{i}({tag})"
        parts.append(base if run == 1 else f"{base}^{run}")

    for lt in w:
        if lt == run_letter:
            run += 1
        else:
            flush()
            run_letter, run = lt, 1
    flush()
    return " ".join(parts)


def _terms_text(items, key_text) -> str:
    if not items:
        return "0"
    chunks: list[str] = []
    for n, (key, coeff) in enumerate(items):
        coeff = Fraction(coeff)
        neg = coeff < 0
        mag = -coeff if neg else coeff
        body = key_text(key)
        if body == "1":
            piece = str(mag)
        elif mag == 1:
            piece = body
        else:
            piece = f"{mag} {body}"
        if n == 0:
            chunks.append(f"-{piece}" if neg else piece)
        else:
            chunks.append(f"{' - ' if neg else ' + '}{piece}")
    return "".join(chunks)


def ncpoly_text(p: NCPoly, symbol: str = "a") -> str:
    return _terms_text(p.sorted_items(), lambda w: word_text(w, symbol))


def tensor_text(t: TensorElement, labels=None) -> str:
    labels = labels or ("a",) * t.rank
    if len(labels) != t.rank:
        raise ValueError(f"expected {t.rank} slot labels, got {len(labels)}")

    def key_text(key) -> str:
        slots = [word_text(w, labels[i]) for i, w in enumerate(key)]
        return " (x) ".join(slots)

    return _tensor_like_text(t.sorted_items(), key_text)


def forest_text(f) -> str:
    if not f:
        return "1"
    return " ".join(tree_to_string(t) for t in f)


def tree_tensor_text(t: TreeTensor) -> str:
    return _tensor_like_text(t.sorted_items(), lambda key: " (x) ".join(tree_to_string(u) for u in key))


def forest_tensor_text(t: ForestTensor) -> str:
    return _tensor_like_text(t.sorted_items(), lambda key: " (x) ".join(forest_text(f) for f in key))


def block_word_text(w) -> str:
    return "[" + ",".join(str(b) for b in w) + "]"


def block_tensor_text(t: BlockTensor) -> str:
    return _tensor_like_text(t.sorted_items(), lambda key: " (x) ".join(block_word_text(w) for w in key))


def _tensor_like_text(items, key_text) -> str:
    if not items:
        return "0"
    chunks: list[str] = []
    for n, (key, coeff) in enumerate(items):
        coeff = Fraction(coeff)
        neg = coeff < 0
        mag = -coeff if neg else coeff
        body = key_text(key)
        piece = body if mag == 1 else f"{mag} {body}"
        if n == 0:
            chunks.append(f"-{piece}" if neg else piece)
        else:
            chunks.append(f"{' - ' if neg else ' + '}{piece}")
    return "".join(chunks)


# -- JSON ---------------------------------------------------------------


def _word_json(w: WordKey) -> list:
    return [[i, t] for i, t in w]


def _parse_word(obj) -> WordKey:
    out = []
    for lt in obj:
        if not (isinstance(lt, list) and len(lt) == 2):
            raise ValueError(f"bad letter {lt!r}: expected [index, tag]")
        out.append((int(lt[0]), int(lt[1])))
    return tuple(out)


def ncpoly_json(p: NCPoly) -> dict:
    return {
        "rank": 1,
        "terms": [
            {"word": _word_json(w), "coeff": coeff_str(c)} for w, c in p.sorted_items()
        ],
    }


def parse_ncpoly(obj: dict) -> NCPoly:
    if obj.get("rank", 1) != 1:
        raise ValueError(f"expected rank 1, got {obj.get('rank')}")
    terms: dict = {}
    for term in obj["terms"]:
        w = _parse_word(term["word"])
        terms[w] = terms.get(w, 0) + parse_coeff(term["coeff"])
    return NCPoly(terms)


def tensor_json(t: TensorElement, labels=None) -> dict:
    out: dict = {"rank": t.rank}
    if labels and any(l != "a" for l in labels):
        out["labels"] = list(labels)
    out["terms"] = [
        {"words": [_word_json(w) for w in key], "coeff": coeff_str(c)}
        for key, c in t.sorted_items()
    ]
    return out


def parse_tensor(obj: dict) -> TensorElement:
    rank = int(obj["rank"])
    terms: dict = {}
    for term in obj["terms"]:
        words = term.get("words")
        if words is None:
            words = [term["word"]]
        key = tuple(_parse_word(w) for w in words)
        terms[key] = terms.get(key, 0) + parse_coeff(term["coeff"])
    return TensorElement(terms, rank=rank)


def tree_tensor_json(t: TreeTensor) -> dict:
    return {
        "rank": t.rank,
        "letters": "tree",
        "terms": [
            {"words": [[tree_to_string(u)] for u in key], "coeff": coeff_str(c)}
            for key, c in t.sorted_items()
        ],
    }


def forest_tensor_json(t: ForestTensor) -> dict:
    return {
        "rank": t.rank,
        "letters": "tree",
        "terms": [
            {"words": [[tree_to_string(u) for u in f] for f in key], "coeff": coeff_str(c)}
            for key, c in t.sorted_items()
        ],
    }


def parse_forest_tensor(obj: dict) -> ForestTensor:
    rank = int(obj["rank"])
    terms: dict = {}
    for term in obj["terms"]:
        key = tuple(tuple(parse_tree(s) for s in f) for f in term["words"])
        terms[key] = terms.get(key, 0) + parse_coeff(term["coeff"])
    return ForestTensor(terms, rank=rank)


def block_tensor_json(t: BlockTensor) -> dict:
    return {
        "rank": t.rank,
        "letters": "block",
        "terms": [
            {"words": [list(w) for w in key], "coeff": coeff_str(c)}
            for key, c in t.sorted_items()
        ],
    }


def parse_block_tensor(obj: dict) -> BlockTensor:
    rank = int(obj["rank"])
    terms: dict = {}
    for term in obj["terms"]:
        key = tuple(tuple(int(b) for b in w) for w in term["words"])
        terms[key] = terms.get(key, 0) + parse_coeff(term["coeff"])
    return BlockTensor(terms, rank=rank)


# -- series ---------------------------------------------------------------


def _algebra_json(algebra) -> dict:
    if isinstance(algebra, Rationals):
        return {"type": "rational"}
    if isinstance(algebra, MatrixAlgebra):
        return {"type": "matrix", "dim": algebra.dim}
    if isinstance(algebra, FormalCoefficients):
        return {"type": "formal"}
    raise ValueError(f"cannot serialize algebra {algebra!r}")


def _parse_algebra(obj: dict):
    kind = obj.get("type")
    if kind == "rational":
        return Rationals()
    if kind == "matrix":
        return MatrixAlgebra(int(obj.get("dim", 2)))
    raise ValueError(f"unknown coefficient algebra type {kind!r}")


def _coeff_json(algebra, value):
    if isinstance(algebra, Rationals):
        return coeff_str(value)
    if isinstance(algebra, MatrixAlgebra):
        return [[coeff_str(v) for v in row] for row in value.rows]
    raise ValueError(f"cannot serialize coefficients of {algebra!r}")


def _parse_coeff_value(algebra, obj):
    if isinstance(algebra, Rationals):
        return parse_coeff(obj)
    if isinstance(algebra, MatrixAlgebra):
        m = Matrix([[parse_coeff(v) for v in row] for row in obj])
        if m.dim != algebra.dim:
            raise ValueError(f"matrix coefficient has dim {m.dim}, expected {algebra.dim}")
        return m
    raise ValueError(f"cannot parse coefficients of {algebra!r}")


def series_json(f: TruncatedSeries) -> dict:
    return {
        "kind": f.kind,
        "order": f.order,
        "algebra": _algebra_json(f.algebra),
        "coeffs": [_coeff_json(f.algebra, c) for c in f.coeffs],
    }


def parse_series(obj: dict) -> TruncatedSeries:
    kind = obj.get("kind")
    if kind not in ("invertible", "diffeo"):
        raise ValueError(f"unknown series kind {kind!r}")
    order = int(obj["order"])
    algebra = _parse_algebra(obj.get("algebra", {"type": "rational"}))
    coeffs = [_parse_coeff_value(algebra, c) for c in obj["coeffs"]]
    return TruncatedSeries(kind, order, algebra, coeffs)


def dumps(obj: dict) -> str:
    return json.dumps(obj, separators=(", ", ": "), sort_keys=False)
