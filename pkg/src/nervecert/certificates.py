"""Machine-checkable certificate documents and their re-verification.

Every certificate embeds the data its verdict depends on, so `recheck` can
re-run the underlying exact predicate from the document alone and either
confirm or refute it.  Bit vectors are serialized as lowercase hex strings,
rationals as exact strings.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, is_remote
from .convex import crossing, hulls_intersect, polytope_is_empty
from .errors import ParseError
from .fileio import (
    _int_list,
    _require,
    complex_from_doc,
    complex_to_doc,
    family_from_doc,
    family_to_doc,
    format_point,
    format_rational,
    parse_point,
    parse_rational,
)
from .nerve import ConvexFamily, NerveMatch
from .obstruction import (
    ObstructionCertificate,
    Placement,
    coboundary_matrix,
    intersection_cocycle,
    moment_curve_placement,
)

NERVE_MISMATCH = "NERVE_MISMATCH"
WITNESS_VIOLATION = "WITNESS_VIOLATION"
LEMMA_VIOLATION = "LEMMA_VIOLATION"
VKF_CERTIFICATE = "VKF_CERTIFICATE"
OBSTRUCTION_REPORT = "OBSTRUCTION_REPORT"
CONSISTENCY_FAILURE = "CONSISTENCY_FAILURE"

KINDS = (
    NERVE_MISMATCH,
    WITNESS_VIOLATION,
    LEMMA_VIOLATION,
    VKF_CERTIFICATE,
    OBSTRUCTION_REPORT,
    CONSISTENCY_FAILURE,
)


def _bits_to_hex(bits: int) -> str:
    return format(bits, "x")


def _hex_to_bits(text) -> int:
    _require(isinstance(text, str), "bit vector must be a hex string")
    try:
        return int(text, 16)
    except ValueError:
        raise ParseError(f"not a hex bit vector: {text!r}") from None


def _params_to_doc(placement: Placement) -> dict:
    return {str(v): format_rational(t) for v, t in placement.params}


def _params_from_doc(raw) -> dict:
    _require(isinstance(raw, dict), "'params' must be an object")
    out = {}
    for key, val in raw.items():
        try:
            v = int(key)
        except ValueError:
            raise ParseError(f"params key {key!r} is not an integer") from None
        out[v] = parse_rational(val)
    return out


def _pieces_to_doc(piece) -> list[list[str]]:
    return [format_point(p) for p in piece]


def _pieces_from_doc(raw, what: str):
    _require(isinstance(raw, list) and raw, f"{what} must be a nonempty list of points")
    return [parse_point(p) for p in raw]


# -- builders ----------------------------------------------------------------

def nerve_mismatch_cert(match: NerveMatch, F: ConvexFamily, K: SimplicialComplex) -> dict:
    return {
        "kind": NERVE_MISMATCH,
        "direction": match.verdict,
        "witness_face": list(match.face),
        "family": family_to_doc(F),
        "complex": complex_to_doc(K),
    }


def witness_violation_cert(violation, F: ConvexFamily) -> dict:
    return {
        "kind": WITNESS_VIOLATION,
        "face": list(violation.face),
        "point": format_point(violation.point),
        "body_label": violation.label,
        "row": violation.row,
        "family": family_to_doc(F),
    }


def lemma_violation_cert(violation, K: SimplicialComplex) -> dict:
    return {
        "kind": LEMMA_VIOLATION,
        "alpha": list(violation.alpha),
        "beta": list(violation.beta),
        "piece_a": _pieces_to_doc(violation.piece_a),
        "piece_b": _pieces_to_doc(violation.piece_b),
        "nerve": complex_to_doc(K),
    }


def vkf_pipeline_cert(gamma, delta, piece_a, piece_b, L: SimplicialComplex, d: int) -> dict:
    return {
        "kind": VKF_CERTIFICATE,
        "mode": "pipeline",
        "gamma": list(gamma),
        "delta": list(delta),
        "d": d,
        "piece_a": _pieces_to_doc(piece_a),
        "piece_b": _pieces_to_doc(piece_b),
        "source": complex_to_doc(L),
    }


def vkf_demo_cert(
    gamma, delta, d: int, placement: Placement, point, K: SimplicialComplex
) -> dict:
    return {
        "kind": VKF_CERTIFICATE,
        "mode": "demo",
        "gamma": list(gamma),
        "delta": list(delta),
        "d": d,
        "params": _params_to_doc(placement),
        "point": format_point(point),
        "complex": complex_to_doc(K),
    }


def obstruction_report_cert(
    K: SimplicialComplex, d: int, placement: Placement, cert: ObstructionCertificate
) -> dict:
    return {
        "kind": OBSTRUCTION_REPORT,
        "vanishes": cert.vanishes,
        "complex": complex_to_doc(K),
        "d": d,
        "params": _params_to_doc(placement),
        "cocycle": _bits_to_hex(cert.cocycle.bits),
        "n_pairs": len(cert.cocycle.index),
        "rank": cert.rank,
        "n_rows": cert.n_rows,
        "combination": None if cert.combination is None else _bits_to_hex(cert.combination),
        "witness": None if cert.witness is None else _bits_to_hex(cert.witness),
    }


def consistency_failure_cert(obstruction_doc: dict, detail: str) -> dict:
    return {
        "kind": CONSISTENCY_FAILURE,
        "detail": detail,
        "obstruction": obstruction_doc,
    }


# -- recheck -----------------------------------------------------------------

def _recheck_nerve_mismatch(doc) -> tuple[bool, str]:
    F = family_from_doc(doc["family"])
    K, _ = complex_from_doc(doc["complex"])
    face = tuple(_int_list(doc["witness_face"], "witness_face"))
    direction = doc.get("direction")
    if direction not in (NerveMatch.MISSING, NerveMatch.EXTRA):
        raise ParseError(f"unknown mismatch direction {direction!r}")
    if not set(face) <= set(F.labels()):
        return False, "witness face names labels outside the family"
    empty = polytope_is_empty(F.subfamily_polytope(face))
    if direction == NerveMatch.MISSING:
        if not K.has_face(face):
            return False, "claimed missing face is not a face of the complex"
        if not empty:
            return False, "claimed missing face has a common point after all"
    else:
        if K.has_face(face):
            return False, "claimed extra face is a face of the complex"
        if empty:
            return False, "claimed extra face has no common point after all"
    return True, "nerve mismatch witness confirmed"


def _recheck_witness_violation(doc) -> tuple[bool, str]:
    F = family_from_doc(doc["family"])
    point = parse_point(doc["point"])
    label = doc["body_label"]
    row = doc["row"]
    body = F.body(label)
    _require(isinstance(row, int) and 0 <= row < body.n_rows, "row index out of range")
    lhs = sum(a * x for a, x in zip(body.A[row], point))
    if lhs > body.b[row]:
        return True, "witness point violates the named constraint row"
    return False, "witness point satisfies the named constraint row"


def _recheck_lemma_violation(doc) -> tuple[bool, str]:
    K, _ = complex_from_doc(doc["nerve"])
    alpha = tuple(_int_list(doc["alpha"], "alpha"))
    beta = tuple(_int_list(doc["beta"], "beta"))
    piece_a = _pieces_from_doc(doc["piece_a"], "piece_a")
    piece_b = _pieces_from_doc(doc["piece_b"], "piece_b")
    if not is_remote(K, alpha, beta):
        return False, "named pair is not remote in the nerve"
    if not hulls_intersect(piece_a, piece_b):
        return False, "named pieces do not intersect"
    return True, "remote pair with intersecting image pieces confirmed"


def _recheck_vkf(doc) -> tuple[bool, str]:
    mode = doc.get("mode")
    gamma = tuple(_int_list(doc["gamma"], "gamma"))
    delta = tuple(_int_list(doc["delta"], "delta"))
    d = doc["d"]
    _require(isinstance(d, int) and d >= 1, "'d' must be a positive integer")
    if set(gamma) & set(delta):
        return False, "simplices share a vertex"
    if len(gamma) != d + 1 or len(delta) != d + 1:
        return False, "simplices do not have dimension d"
    if mode == "pipeline":
        L, _ = complex_from_doc(doc["source"])
        if not (L.has_face(gamma) and L.has_face(delta)):
            return False, "pair is not a pair of source faces"
        piece_a = _pieces_from_doc(doc["piece_a"], "piece_a")
        piece_b = _pieces_from_doc(doc["piece_b"], "piece_b")
        if not hulls_intersect(piece_a, piece_b):
            return False, "image pieces do not intersect"
        return True, "intersecting image pieces of disjoint simplices confirmed"
    if mode == "demo":
        K, _ = complex_from_doc(doc["complex"])
        if not (K.has_face(gamma) and K.has_face(delta)):
            return False, "pair is not a pair of complex faces"
        placement = moment_curve_placement(K, d, _params_from_doc(doc["params"]))
        point = parse_point(doc["point"])
        result = crossing(
            [placement.point(v) for v in gamma],
            [placement.point(v) for v in delta],
        )
        if result.parity != 1:
            return False, "pair does not cross under the placement"
        if result.point != point:
            return False, "intersection point disagrees"
        return True, "crossing pair with exact intersection point confirmed"
    raise ParseError(f"unknown VKF certificate mode {mode!r}")


def _recheck_obstruction(doc) -> tuple[bool, str]:
    K, _ = complex_from_doc(doc["complex"])
    d = doc["d"]
    _require(isinstance(d, int) and d >= 1, "'d' must be a positive integer")
    placement = moment_curve_placement(K, d, _params_from_doc(doc["params"]))
    cocycle = intersection_cocycle(K, d, placement)
    if len(cocycle.index) != doc["n_pairs"]:
        return False, "pair index size disagrees"
    if cocycle.bits != _hex_to_bits(doc["cocycle"]):
        return False, "recomputed cocycle disagrees"
    M = coboundary_matrix(K, d)
    if M.n_rows != doc["n_rows"]:
        return False, "coboundary row count disagrees"
    vanishes = doc["vanishes"]
    _require(isinstance(vanishes, bool), "'vanishes' must be a boolean")
    combination = doc.get("combination")
    witness = doc.get("witness")
    cert = ObstructionCertificate(
        vanishes,
        cocycle,
        doc["rank"],
        M.n_rows,
        None if combination is None else _hex_to_bits(combination),
        None if witness is None else _hex_to_bits(witness),
    )
    if not cert.verify(M):
        return False, "certificate fails against the rebuilt system"
    return True, "obstruction verdict confirmed"


def _recheck_consistency_failure(doc) -> tuple[bool, str]:
    inner = doc.get("obstruction")
    _require(isinstance(inner, dict), "consistency failure needs the embedded obstruction")
    if inner.get("vanishes") is not False:
        return False, "embedded obstruction is not a nonvanishing certificate"
    ok, detail = _recheck_obstruction(inner)
    if not ok:
        return False, f"embedded obstruction failed: {detail}"
    return True, "embedded nonvanishing certificate confirmed"


_RECHECKERS = {
    NERVE_MISMATCH: _recheck_nerve_mismatch,
    WITNESS_VIOLATION: _recheck_witness_violation,
    LEMMA_VIOLATION: _recheck_lemma_violation,
    VKF_CERTIFICATE: _recheck_vkf,
    OBSTRUCTION_REPORT: _recheck_obstruction,
    CONSISTENCY_FAILURE: _recheck_consistency_failure,
}


def recheck_certificate(doc) -> tuple[bool, str]:
    """Re-run the exact predicate behind a certificate document."""
    _require(isinstance(doc, dict), "certificate must be an object")
    kind = doc.get("kind")
    if kind not in _RECHECKERS:
        raise ParseError(f"unknown certificate kind {kind!r}")
    try:
        return _RECHECKERS[kind](doc)
    except KeyError as exc:
        raise ParseError(f"certificate is missing field {exc}") from exc
