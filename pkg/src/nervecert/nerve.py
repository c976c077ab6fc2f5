"""Nerves of finite convex families, exactly.

Two engines build the same complex: exhaustive enumeration (every candidate
subfamily gets an LP feasibility test) and the Helly-accelerated engine,
which only runs LPs up to subfamily size m+1 and closes larger faces
combinatorially -- in R^m a family has a common point exactly when every
m+1 of its members do.  The exhaustive engine is kept as a cross-check
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Face, SimplicialComplex
from .convex import HPolytope, polytope_is_empty
from .errors import DimensionMismatchError, FamilyCapError, LabelMismatchError

DEFAULT_BODY_CAP = 20


@dataclass(frozen=True)
class ConvexFamily:
    """Labeled convex bodies sharing one ambient dimension."""

    ambient: int
    bodies: tuple[tuple[int, HPolytope], ...]

    @classmethod
    def of(cls, ambient: int, bodies) -> "ConvexFamily":
        entries = tuple((int(label), body) for label, body in bodies)
        labels = [label for label, _ in entries]
        if len(set(labels)) != len(labels):
            raise ValueError("family labels must be distinct")
        for label, body in entries:
            if label < 0:
                raise ValueError(f"labels must be nonnegative integers, got {label}")
            if body.ambient != ambient:
                raise DimensionMismatchError(
                    f"body {label} lives in R^{body.ambient}, family in R^{ambient}"
                )
        return cls(ambient, entries)

    def labels(self) -> list[int]:
        return sorted(label for label, _ in self.bodies)

    def body(self, label: int) -> HPolytope:
        for lab, body in self.bodies:
            if lab == label:
                return body
        raise KeyError(f"no body labeled {label}")

    def subfamily_polytope(self, face) -> HPolytope:
        """Stacked constraint system of the bodies named by a face."""
        return HPolytope.stack([self.body(label) for label in face])


@dataclass(frozen=True)
class NerveMatch:
    """Verdict of comparing a claimed complex against a family's nerve."""

    verdict: str  # "equal" | "missing_face" | "extra_face"
    face: Face | None

    EQUAL = "equal"
    MISSING = "missing_face"
    EXTRA = "extra_face"

    @property
    def is_equal(self) -> bool:
        return self.verdict == NerveMatch.EQUAL


def _face_has_common_point(F: ConvexFamily, face: Face) -> bool:
    return not polytope_is_empty(F.subfamily_polytope(face))


def _build_nerve(F: ConvexFamily, cap: int, helly: bool) -> SimplicialComplex:
    n = len(F.bodies)
    if n > cap:
        raise FamilyCapError(
            f"family has {n} bodies, enumeration cap is {cap}"
        )
    labels = F.labels()
    level: list[Face] = [
        (label,) for label in labels if _face_has_common_point(F, (label,))
    ]
    faces: set[Face] = set(level)
    size = 2
    while level:
        prev = set(level)
        nxt: list[Face] = []
        for base in level:
            for label in labels:
                if label <= base[-1]:
                    continue
                cand = base + (label,)
                # downward-closure pruning: all facets of cand must be faces
                if any(
                    cand[:i] + cand[i + 1:] not in prev for i in range(size)
                ):
                    continue
                if helly and size > F.ambient + 1:
                    nxt.append(cand)  # Helly closure, no LP needed
                elif _face_has_common_point(F, cand):
                    nxt.append(cand)
        faces.update(nxt)
        level = nxt
        size += 1
    vertices = frozenset(f[0] for f in faces if len(f) == 1)
    return SimplicialComplex(vertices, frozenset(faces))


def nerve_exhaustive(F: ConvexFamily, cap: int = DEFAULT_BODY_CAP) -> SimplicialComplex:
    """Nerve by LP-testing every candidate subfamily (supersets of empty ones pruned)."""
    return _build_nerve(F, cap, helly=False)


def nerve_helly(F: ConvexFamily, cap: int = DEFAULT_BODY_CAP) -> SimplicialComplex:
    """Nerve with LPs only up to subfamily size m+1; larger faces close combinatorially."""
    return _build_nerve(F, cap, helly=True)


def nerve_matches(
    F: ConvexFamily, K: SimplicialComplex, engine=nerve_helly
) -> NerveMatch:
    """Compare the family's nerve against K under the shared labeling.

    On mismatch returns the minimal-cardinality, lexicographically least
    witness face, tagged missing_face when K claims a face the nerve lacks
    and extra_face when the nerve has a face K lacks.
    """
    if set(F.labels()) != set(K.vertices):
        raise LabelMismatchError(
            f"family labels {sorted(F.labels())} != complex vertices {sorted(K.vertices)}"
        )
    nerve = engine(F)
    if nerve.faces == K.faces:
        return NerveMatch(NerveMatch.EQUAL, None)
    missing = K.faces - nerve.faces
    extra = nerve.faces - K.faces
    witness = min(missing | extra, key=lambda f: (len(f), f))
    verdict = NerveMatch.MISSING if witness in missing else NerveMatch.EXTRA
    return NerveMatch(verdict, witness)
