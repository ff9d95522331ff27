"""Independent certificate verifier.

Takes nothing in a certificate on trust: the group axioms, the CM-type
partition, validity of every monomial, the induced families, the balanced
transcripts, and the coverage claim are all recomputed from the raw tables
in the file and compared against what the certificate asserts.  The valid
set itself is recomputed by brute force, so a certificate cannot pass by
being self-consistent about a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cmtypes import induced_type, validate_cm_type
from .errors import CmhodgeError
from .groups import build_group, embedding_set, mask_of
from .monomials import enumerate_valid_bruteforce, valid_delta
from .report import BUNDLE_KIND, CERTIFICATE_KIND, content_hash

# checks, in the order they run; the verdict names the first one to fail
CHECKS = (
    "schema",
    "content_hash",
    "group_axioms",
    "factors",
    "cm_type",
    "degree",
    "delta_valid",
    "induced_family",
    "balanced",
    "translates",
    "orbit_reps",
    "weil_data",
    "coverage",
    "valid_set",
)


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failed_check: str | None = None
    detail: str = ""

    def describe(self) -> str:
        if self.ok:
            return "pass"
        return f"fail [{self.failed_check}] {self.detail}"


def _fail(check: str, detail: str) -> VerificationResult:
    return VerificationResult(False, check, detail)


def verify_certificate(data: dict) -> VerificationResult:
    """Re-check a single certificate from scratch."""
    try:
        if data.get("kind") != CERTIFICATE_KIND:
            return _fail("schema", f"unexpected kind {data.get('kind')!r}")
        inst = data["instance"]
        order = inst["group"]["order"]
        table = inst["group"]["table"]
        iota = inst["group"]["iota"]
        factors = inst["factors"]
        cm_points = inst["cm_type"]
        p = data["p"]
        witnesses = data["witnesses"]
        orbit_reps = data["orbit_reps"]
        coverage = data["coverage"]
        valid_set = data["valid_set"]
        verdict = data["verdict"]
    except (KeyError, TypeError) as exc:
        return _fail("schema", f"missing or malformed field: {exc}")

    if data.get("content_hash") != content_hash(data):
        return _fail("content_hash", "stored hash does not match the content")

    try:
        group = build_group(order, table, iota)
    except CmhodgeError as exc:
        return _fail("group_axioms", str(exc))
    try:
        embeddings = embedding_set(group, factors)
    except CmhodgeError as exc:
        return _fail("factors", str(exc))
    try:
        phi = validate_cm_type(embeddings, cm_points)
    except CmhodgeError as exc:
        return _fail("cm_type", str(exc))

    if len(witnesses) != len(orbit_reps):
        return _fail("schema", "witness count differs from orbit representative count")

    for i, w in enumerate(witnesses):
        delta = mask_of(w["delta"])
        if delta != mask_of(orbit_reps[i]):
            return _fail("schema", f"witness {i} delta differs from its orbit representative")
        if len(w["delta"]) != 2 * p:
            return _fail("degree", f"witness {i} has {len(w['delta'])} points, expected {2 * p}")
        if not valid_delta(phi, delta, p):
            return _fail("delta_valid", f"witness {i} monomial fails the validity criterion")

        family = w["family"]
        delta_points = sorted(w["delta"])
        if len(family) != len(delta_points):
            return _fail("induced_family", f"witness {i} family size differs from |delta|")
        for s, stored in zip(delta_points, family):
            expected = sorted(induced_type(phi, s).elements)
            if sorted(stored) != expected:
                return _fail(
                    "induced_family",
                    f"witness {i}: stored type at point {s} is not the induced type",
                )

        transcript = w["balanced_transcript"]
        member_sets = [set(f) for f in family]
        recomputed = [
            sum(1 for ms in member_sets if t in ms) for t in group.elements()
        ]
        if list(transcript) != recomputed:
            return _fail("balanced", f"witness {i} transcript does not match the family")
        if any(v != p for v in recomputed):
            return _fail("balanced", f"witness {i} transcript is not identically {p}")

        translates = sorted(
            {embeddings.translate_mask(t, delta) for t in group.elements()}
        )
        if [mask_of(d) for d in w["covered_translates"]] != translates:
            return _fail("translates", f"witness {i} covered translates are wrong")
        if delta != translates[0]:
            return _fail("orbit_reps", f"representative {i} is not minimal in its orbit")

        wd = w["weil_data"]
        if (wd["d"], wd["rank_over_f"], wd["dim_over_q"]) != (2 * p, 1, group.order):
            return _fail("weil_data", f"witness {i} weil numerology is wrong")

    stored_coverage = sorted(mask_of(d) for d in coverage)
    union = sorted(
        {
            mask_of(d)
            for w in witnesses
            for d in w["covered_translates"]
        }
    )
    if stored_coverage != union:
        return _fail("coverage", "stored coverage is not the union of witness translates")

    true_valid = enumerate_valid_bruteforce(phi, p)
    if sorted(mask_of(d) for d in valid_set) != true_valid:
        return _fail("valid_set", "stored valid set differs from the brute-force recomputation")
    if (stored_coverage == true_valid) != verdict or not verdict:
        return _fail("coverage", "coverage verdict is wrong")

    return VerificationResult(True)


def verify_document(data: dict) -> list[tuple[str, VerificationResult]]:
    """Verify a certificate or a bundle; returns (label, result) pairs."""
    if data.get("kind") == BUNDLE_KIND:
        if data.get("content_hash") != content_hash(data):
            return [("bundle", _fail("content_hash", "bundle hash mismatch"))]
        return [
            (f"p={cert.get('p', '?')}", verify_certificate(cert))
            for cert in data.get("certificates", [])
        ]
    return [(f"p={data.get('p', '?')}", verify_certificate(data))]
