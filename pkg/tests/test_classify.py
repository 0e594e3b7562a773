import itertools

import pytest

from bkcalc import (
    GroupType,
    InvalidWitness,
    NonDominantInput,
    OracleBudget,
    classify,
    cohomological_witnesses,
    face_sample,
    invariant_dim,
    multiply,
    prv_witnesses,
    regularly_extremal_witnesses,
    weight_star,
    weyl_group,
)


@pytest.fixture(scope="module")
def a2():
    return weyl_group(GroupType.parse("A2"))


def test_prv_witness_examples(a2):
    wits = prv_witnesses(a2, ((1, 0), (0, 1), (0, 0)))
    assert (a2.w0, a2.identity, a2.identity) in wits
    rho = (1, 1)
    s12 = multiply(*a2.simple)
    s21 = multiply(*reversed(a2.simple))
    assert (a2.identity, s12, s21) in prv_witnesses(a2, (rho, rho, rho))


def test_prv_witnesses_satisfy_zero_sum(a2):
    weights = ((2, 1), (1, 1), (1, 2))
    for tup in prv_witnesses(a2, weights):
        total = (0, 0)
        for u, lam in zip(tup, weights):
            total = tuple(a + b for a, b in zip(total, u.act(lam)))
        assert total == (0, 0)


def test_prv_rejects_non_dominant(a2):
    with pytest.raises(NonDominantInput):
        prv_witnesses(a2, ((1, -1), (0, 0), (0, 0)))


def test_cohomological_witness_examples(a2):
    # Cartan component: (lam, mu, (lam+mu)*) always carries (e, e, w0)
    wits = cohomological_witnesses(a2, ((1, 0), (0, 1), (1, 1)))
    assert (a2.identity, a2.identity, a2.w0) in wits
    wits2 = cohomological_witnesses(a2, ((1, 0), (0, 1), (0, 0)))
    assert (a2.w0, a2.identity, a2.identity) in wits2
    assert cohomological_witnesses(a2, ((1, 1), (1, 1), (1, 1))) == []


def test_cohomological_witnesses_partition_and_zero_sum(a2):
    weights = ((1, 0), (0, 1), (1, 1))
    for tup in cohomological_witnesses(a2, weights):
        union = 0
        total_len = 0
        for w in tup:
            union |= w.inversions
            total_len += w.length
        assert union == a2.full_mask and total_len == a2.rs.n_pos
        total = (0, 0)
        for u, lam in zip(tup, weights):
            total = tuple(
                a + b for a, b in zip(total, a2.inverse(u).act(lam))
            )
        assert total == (0, 0)


def test_regularly_extremal_examples(a2):
    wits = regularly_extremal_witnesses(a2, ((1, 0), (0, 1), (1, 1)))
    assert (a2.w0, a2.w0, a2.identity) in wits
    wits2 = regularly_extremal_witnesses(
        a2, ((1, 0), (0, 1), (0, 0)), verify_cup=True
    )
    assert (a2.identity, a2.w0, a2.w0) in wits2
    assert regularly_extremal_witnesses(a2, ((1, 1), (1, 1), (1, 1))) == []


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_cohomological_extremal_bijection(label):
    """Right w0-translation matches the two witness sets exactly."""
    g = weyl_group(GroupType.parse(label))
    w0 = g.w0
    for lam in itertools.product(range(2), repeat=g.rs.rank):
        for mu in itertools.product(range(2), repeat=g.rs.rank):
            for nu in itertools.product(range(2), repeat=g.rs.rank):
                coh = cohomological_witnesses(g, (lam, mu, nu))
                reg = regularly_extremal_witnesses(g, (lam, mu, nu))
                translated = sorted(
                    (
                        tuple(multiply(u, w0) for u in tup)
                        for tup in coh
                    ),
                    key=lambda t: (sum(w.length for w in t),
                                   tuple(w.word for w in t)),
                )
                assert translated == reg
                assert bool(coh) == bool(reg)


def test_classify_cartan_component(a2):
    c = classify(a2, ((1, 0), (0, 1), (1, 1)), K=3)
    assert c.prv and c.cohomological and c.regularly_extremal
    assert c.stable_mult_one.kind == "proven_true"
    assert c.oracle_mults == [(1, 1), (2, 1), (3, 1)]


def test_classify_rho_cubed(a2):
    c = classify(a2, ((1, 1), (1, 1), (1, 1)), K=1)
    assert c.prv and not c.cohomological and not c.regularly_extremal
    assert c.stable_mult_one.kind == "refuted"
    assert (c.stable_mult_one.refuted_k, c.stable_mult_one.refuted_dim) == (1, 2)


def test_classify_zero_triple(a2):
    c = classify(a2, ((0, 0), (0, 0), (0, 0)), K=2)
    assert c.prv and c.cohomological
    assert c.stable_mult_one.kind == "proven_true"
    assert all(d == 1 for _, d in c.oracle_mults)


def test_classify_two_factor_duality(a2):
    c = classify(a2, ((2, 1), (1, 2)), K=2)
    assert c.cohomological and c.stable_mult_one.kind == "proven_true"
    c2 = classify(a2, ((2, 1), (2, 1)), K=1)
    assert not c2.cohomological
    # (2,1) tensor (2,1) has no invariant vector at any scaling
    assert c2.oracle_mults == [(1, 0)]


def test_classify_overflow_still_returns(a2):
    c = classify(a2, ((1, 1), (1, 1), (1, 1)), K=3,
                 budget=OracleBudget(dim_cap=4))
    assert c.oracle_overflow
    assert c.oracle_mults == []
    assert c.prv  # combinatorial flags unaffected


def test_face_sample_cartan_witness(a2):
    fs = face_sample(a2, (a2.identity, a2.identity, a2.w0), 1)
    assert ((1, 0), (0, 1), (1, 1)) in fs.triples
    assert fs.lattice_rank == 4  # 2r for rank 2
    for lam, mu, nu in fs.triples:
        assert nu == weight_star(a2, tuple(
            a + b for a, b in zip(lam, mu)
        ))


def test_face_sample_translated_witness(a2):
    fs = face_sample(a2, (a2.w0, a2.identity, a2.identity), 1)
    assert ((1, 1), (1, 0), (0, 1)) in fs.triples
    assert fs.lattice_rank == 4


def test_face_sample_triples_lie_in_the_cone(a2):
    fs = face_sample(a2, (a2.identity, a2.identity, a2.w0), 2)
    for triple in fs.triples:
        assert invariant_dim(a2.rs, triple) >= 1


def test_face_sample_invalid_witness(a2):
    s1 = a2.simple[0]
    with pytest.raises(InvalidWitness):
        face_sample(a2, (s1, s1, a2.w0), 1)


def test_classify_s4_extended_flag(a2):
    c = classify(a2, ((1, 0), (0, 1), (1, 0), (0, 1)), K=1)
    assert c.extended
    # (omega1 + omega2 pairing twice) contains an invariant vector
    assert c.oracle_mults[0][1] >= 1
