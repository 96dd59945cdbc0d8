"""Equivalence prover, certificate replay and the conjugation-free verdict."""

from dataclasses import replace

import pytest

from arrgroup import (
    Budget,
    CyclicRelation,
    Presentation,
    ProverError,
    ReplayError,
    candidate_cf,
    cf_verdict,
    format_certificate,
    format_verdict,
    parse_certificate,
    prove_equivalent,
    replay,
)
from conftest import pipeline


def two_gen_target():
    rels = (
        CyclicRelation.make(((1,), (3,)), 3),
        CyclicRelation.make(((2,), (3,)), 3),
    )
    return Presentation(3, rels)


def two_gen_source():
    rels = (
        CyclicRelation.make(((1,), (2, 3, -2)), 3),
        CyclicRelation.make(((2,), (3,)), 3),
    )
    return Presentation(3, rels)


def test_identical_presentations_certify_trivially():
    tri = pipeline("triangle").presentation
    result = prove_equivalent(tri, tri)
    assert result.status == "certified"
    replay(tri, tri, result.certificate)
    assert result.certificate.match == tuple(
        (i, i) for i in range(len(tri.relations))
    )


def test_conjugated_commutator_certifies():
    source, target = two_gen_source(), two_gen_target()
    result = prove_equivalent(source, target)
    assert result.status == "certified"
    replay(source, target, result.certificate)
    kinds = {step[0] for step in result.certificate.forward}
    assert kinds  # at least one rewrite was needed


def test_certificate_text_round_trip():
    result = prove_equivalent(two_gen_source(), two_gen_target())
    cert = result.certificate
    assert parse_certificate(format_certificate(cert)) == cert


def test_parse_certificate_rejects_garbage():
    with pytest.raises(ReplayError):
        parse_certificate("not a certificate\n")
    good = format_certificate(
        prove_equivalent(two_gen_source(), two_gen_target()).certificate
    )
    with pytest.raises(ReplayError):
        parse_certificate(good.replace("certificate-v1", "certificate-v9"))


def test_replay_rejects_tampered_certificates():
    source, target = two_gen_source(), two_gen_target()
    cert = prove_equivalent(source, target).certificate
    with pytest.raises(ReplayError):
        replay(source, target, replace(cert, forward=cert.forward[:-1]))
    crossed = tuple((r, 1 - t) for r, t in cert.match)
    with pytest.raises(ReplayError):
        replay(source, target, replace(cert, match=crossed))
    with pytest.raises(ReplayError):
        replay(source, target, replace(cert, match=cert.match[:1]))
    with pytest.raises(ReplayError):
        replay(target, source, cert)


def test_replay_connects_the_stated_pair_only():
    tri = pipeline("triangle").presentation
    cert = prove_equivalent(tri, tri).certificate
    other = two_gen_target()
    with pytest.raises(ReplayError):
        replay(other, other, cert)


def test_mismatched_shapes_are_unknown_not_errors():
    tri = pipeline("triangle").presentation
    pencil = pipeline("pencil").presentation
    result = prove_equivalent(tri, pencil)
    assert result.status == "unknown"
    assert "counts differ" in result.reason


def test_tiny_budget_gives_honest_unknown():
    pipe = pipeline("triangle")
    cand = candidate_cf(pipe.lattice)
    budget = Budget(max_steps=2, plateau_nodes=1, bfs_nodes=1, bfs_depth=1)
    result = prove_equivalent(pipe.presentation, cand, budget)
    assert result.status in ("certified", "unknown")
    if result.status == "unknown":
        assert result.certificate is None
        assert result.reason
    else:
        replay(pipe.presentation, cand, result.certificate)


def test_verdict_triangle_certifies_with_replayable_certificate():
    pipe = pipeline("triangle")
    verdict = cf_verdict(pipe.lattice, pipe.presentation)
    assert verdict.status == "Certified"
    assert verdict.ordering == (1, 2, 3, 4, 5, 6)
    assert verdict.orderings_tried == 1
    replay(pipe.presentation, verdict.candidate_line_labels, verdict.certificate)
    assert "Certified" in format_verdict(verdict)


def test_verdict_accepts_explicit_ordering():
    pipe = pipeline("triangle")
    verdict = cf_verdict(pipe.lattice, pipe.presentation, (1, 2, 3, 4, 5, 6))
    assert verdict.status == "Certified"
    with pytest.raises(ProverError):
        cf_verdict(pipe.lattice, pipe.presentation, (1, 1, 2, 3, 4, 5))
    with pytest.raises(ProverError):
        cf_verdict(pipe.lattice, pipe.presentation, "sideways")


def test_verdict_ceva_identity_is_unknown():
    pipe = pipeline("ceva")
    verdict = cf_verdict(pipe.lattice, pipe.presentation)
    assert verdict.status == "Unknown"
    assert verdict.certificate is None
    assert verdict.reason
    assert "Unknown" in format_verdict(verdict)


def test_verdict_checks_line_counts():
    with pytest.raises(ProverError):
        cf_verdict(pipeline("triangle").lattice, pipeline("pencil").presentation)
