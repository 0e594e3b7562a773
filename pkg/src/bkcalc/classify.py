"""Classification of dominant weight tuples against the tensor cone.

A tuple can be a PRV point (some Weyl translates of the weights sum to
zero), a cohomological point (a PRV witness whose inverted elements have
inversion sets partitioning Phi+), or regularly extremal (the w0-translated
form of the same condition).  Stable multiplicity one is proven by a
cohomological witness and otherwise probed at finite depth by the tensor
oracle, never asserted from a finite probe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bkring import enumerate_partition_tuples
from .errors import InvalidWitness, NonDominantInput, OracleOverflow
from .rootsys import RootSystem, Weight, add_weights, is_dominant, neg_weight
from .tensoracle import DEFAULT_BUDGET, OracleBudget, stable_mult_probe
from .weyl import WeylElement, WeylGroup, multiply

DEFAULT_SCALING_DEPTH = 3


@dataclass(frozen=True)
class StableStatus:
    """Three-valued stable-multiplicity-one verdict with provenance."""

    kind: str  # "proven_true" | "refuted" | "unknown"
    refuted_k: int | None = None
    refuted_dim: int | None = None
    probed_depth: int | None = None
    provenance: str = ""

    @classmethod
    def proven_true(cls) -> "StableStatus":
        return cls("proven_true", provenance="cohomological witness (exact)")

    @classmethod
    def refuted(cls, k: int, dim: int) -> "StableStatus":
        return cls(
            "refuted",
            refuted_k=k,
            refuted_dim=dim,
            provenance=f"oracle dimension {dim} != 1 at scaling {k}",
        )

    @classmethod
    def unknown(cls, depth: int) -> "StableStatus":
        return cls(
            "unknown",
            probed_depth=depth,
            provenance=f"all probed dimensions equal 1 up to scaling {depth}; "
            "finite probing cannot prove stability",
        )


@dataclass
class TripleClassification:
    """Full verdict for one dominant weight tuple."""

    weights: tuple[Weight, ...]
    prv: bool
    prv_witnesses: list[tuple[WeylElement, ...]]
    cohomological: bool
    coh_witnesses: list[tuple[WeylElement, ...]]
    regularly_extremal: bool
    reg_witnesses: list[tuple[WeylElement, ...]]
    stable_mult_one: StableStatus
    oracle_mults: list[tuple[int, int]] = field(default_factory=list)
    oracle_overflow: bool = False
    extended: bool = False  # s > 3 analogue, beyond the three-factor statements


def _require_dominant_tuple(weights) -> None:
    for w in weights:
        if not is_dominant(w):
            raise NonDominantInput(f"weight {w} is not dominant")


def _witness_sort_key(tup):
    return (sum(w.length for w in tup), tuple(w.word for w in tup))


def prv_witnesses(
    group: WeylGroup, weights: tuple[Weight, ...]
) -> list[tuple[WeylElement, ...]]:
    """All reduced witness tuples with the translated weights summing to zero.

    The search enumerates the first s-1 slots over W; the last element is
    reported as the minimal-length element carrying the last weight onto
    the forced value, so each geometric witness appears once.
    """
    if len(weights) < 2:
        raise ValueError("need at least two weights")
    _require_dominant_tuple(weights)
    for w in weights:
        group.rs.check_rank(w)
    rs = group.rs
    last = weights[-1]

    # minimal-length element sending `last` onto each orbit point
    key = ("orbit_min", last)
    if key not in group.misc_cache:
        orbit: dict[Weight, WeylElement] = {}
        for w in group.elements:
            orbit.setdefault(w.act(last), w)
        group.misc_cache[key] = orbit
    orbit = group.misc_cache[key]

    out = []
    for front in itertools.product(group.elements, repeat=len(weights) - 1):
        total = (0,) * rs.rank
        for u, lam in zip(front, weights[:-1]):
            total = add_weights(total, u.act(lam))
        target = neg_weight(total)
        w_last = orbit.get(target)
        if w_last is not None:
            out.append(front + (w_last,))
    out.sort(key=_witness_sort_key)
    return out


def cohomological_witnesses(
    group: WeylGroup, weights: tuple[Weight, ...]
) -> list[tuple[WeylElement, ...]]:
    """Witness tuples whose inversion sets partition Phi+ and whose
    inverted elements translate the weights to a zero sum."""
    _require_dominant_tuple(weights)
    for w in weights:
        group.rs.check_rank(w)
    rs = group.rs
    out = []
    for tup in enumerate_partition_tuples(group, len(weights)):
        total = (0,) * rs.rank
        for u, lam in zip(tup, weights):
            total = add_weights(total, group.inverse(u).act(lam))
        if all(c == 0 for c in total):
            out.append(tup)
    out.sort(key=_witness_sort_key)
    return out


def regularly_extremal_witnesses(
    group: WeylGroup,
    weights: tuple[Weight, ...],
    verify_cup: bool = False,
) -> list[tuple[WeylElement, ...]]:
    """Witnesses for membership in a minimal regular face of the cone.

    Candidates are the right w0-translates of the partition tuples, so the
    complement condition holds by construction; the zero-sum condition is
    checked directly.  The cup condition follows and is re-verified through
    the polynomial oracle only when ``verify_cup`` is set.
    """
    _require_dominant_tuple(weights)
    rs = group.rs
    w0 = group.w0
    out = []
    for tup in enumerate_partition_tuples(group, len(weights)):
        cand = tuple(multiply(u, w0) for u in tup)
        total = (0,) * rs.rank
        for u, lam in zip(cand, weights):
            total = add_weights(total, group.inverse(u).act(lam))
        if all(c == 0 for c in total):
            if verify_cup and len(cand) == 3:
                from .cupcalc import schubert_calculus

                calc = schubert_calculus(group)
                assert calc.cup_coefficient(*cand) == 1
            out.append(cand)
    out.sort(key=_witness_sort_key)
    return out


def classify(
    group: WeylGroup,
    weights: tuple[Weight, ...],
    K: int = DEFAULT_SCALING_DEPTH,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> TripleClassification:
    """Compute every flag, all witnesses, and the oracle evidence."""
    _require_dominant_tuple(weights)
    if K < 1:
        raise ValueError("scaling depth must be at least 1")
    prv = prv_witnesses(group, weights)
    coh = cohomological_witnesses(group, weights)
    reg = regularly_extremal_witnesses(group, weights)

    mults: list[tuple[int, int]] = []
    overflow = False
    try:
        mults = stable_mult_probe(group.rs, weights, K, budget)
    except OracleOverflow as exc:
        mults = list(exc.partial)
        overflow = True

    if coh:
        stable = StableStatus.proven_true()
    else:
        refuted = next(((k, d) for k, d in mults if d != 1), None)
        if refuted:
            stable = StableStatus.refuted(*refuted)
        else:
            stable = StableStatus.unknown(len(mults))

    return TripleClassification(
        weights=tuple(weights),
        prv=bool(prv),
        prv_witnesses=prv,
        cohomological=bool(coh),
        coh_witnesses=coh,
        regularly_extremal=bool(reg),
        reg_witnesses=reg,
        stable_mult_one=stable,
        oracle_mults=mults,
        oracle_overflow=overflow,
        extended=len(weights) > 3,
    )


@dataclass
class FaceSample:
    """Grid sample of a minimal regular face plus its lattice rank."""

    witness: tuple[WeylElement, ...]
    triples: list[tuple[Weight, ...]]
    lattice_rank: int


def face_sample(
    group: WeylGroup,
    witness: tuple[WeylElement, WeylElement, WeylElement],
    bound: int,
) -> FaceSample:
    """All dominant triples on the face of one partition witness.

    The first two weights range over the dominant box with coordinates up
    to ``bound``; the third is forced by the zero-sum condition and kept
    when dominant.  The rank of the lattice spanned by the samples is at
    most twice the group rank, with equality for a large enough bound.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    u, v, w = witness
    group_full = group.full_mask
    if (
        u.inversions | v.inversions | w.inversions != group_full
        or u.length + v.length + w.length != group.rs.n_pos
    ):
        raise InvalidWitness(
            "witness inversion sets do not partition the positive roots"
        )
    rs = group.rs
    u_inv, v_inv, w_inv = group.inverse(u), group.inverse(v), group.inverse(w)
    triples = []
    grid = itertools.product(range(bound + 1), repeat=rs.rank)
    for lam in grid:
        for mu in itertools.product(range(bound + 1), repeat=rs.rank):
            partial = add_weights(u_inv.act(lam), v_inv.act(mu))
            nu = neg_weight(w.act(partial))
            if is_dominant(nu):
                # exact zero-sum identity by construction
                assert all(
                    c == 0
                    for c in add_weights(partial, w_inv.act(nu))
                )
                triples.append((lam, mu, nu))
    return FaceSample(witness, triples, _lattice_rank(triples))


def _lattice_rank(triples) -> int:
    from fractions import Fraction

    rows = [
        [Fraction(c) for w in t for c in w] for t in triples
    ]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_col = 0
    while rows and pivot_col < cols:
        piv = next((r for r in rows if r[pivot_col] != 0), None)
        if piv is None:
            pivot_col += 1
            continue
        rows.remove(piv)
        piv = [c / piv[pivot_col] for c in piv]
        rows = [
            [c - r[pivot_col] * p for c, p in zip(r, piv)]
            for r in rows
        ]
        rank += 1
        pivot_col += 1
    return rank
