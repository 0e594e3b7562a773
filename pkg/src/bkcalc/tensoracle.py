"""Brute-force tensor-product oracle: exact and budgeted, never approximate.

Weight multiplicities come from the Freudenthal recursion; tensor products
from the Klimyk sign-regularization over the weights of the smaller factor.
Everything is exact integer / rational arithmetic; exceeding the size budget
raises :class:`OracleOverflow` instead of degrading.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonDominantInput, OracleOverflow
from .rootsys import RootSystem, Weight, add_weights, is_dominant, neg_weight


@dataclass(frozen=True)
class OracleBudget:
    """Caps on module size; the oracle refuses rather than approximates."""

    dim_cap: int = 10**5
    weight_support_cap: int = 10**6


DEFAULT_BUDGET = OracleBudget()


@dataclass(frozen=True)
class Decomposition:
    """Multiset of highest weights of an (iterated) tensor product."""

    terms: tuple[tuple[Weight, int], ...]  # sorted lexicographically by weight

    def multiplicity(self, lam: Weight) -> int:
        for w, m in self.terms:
            if w == lam:
                return m
        return 0

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.terms)


def _require_dominant(lam: Weight) -> None:
    if not is_dominant(lam):
        raise NonDominantInput(f"weight {lam} is not dominant")


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible module, by the Weyl formula."""
    rs.check_rank(lam)
    _require_dominant(lam)
    lam_rho = add_weights(lam, rs.rho)
    num = math.prod(rs.pairing(lam_rho, i) for i in range(rs.n_pos))
    den = math.prod(rs.pairing(rs.rho, i) for i in range(rs.n_pos))
    q, r = divmod(num, den)
    assert r == 0
    return q


_freudenthal_cache: dict = {}


def weight_multiplicities(
    rs: RootSystem, lam: Weight, budget: OracleBudget = DEFAULT_BUDGET
) -> dict[Weight, int]:
    """All weights of the irreducible module with their multiplicities."""
    rs.check_rank(lam)
    _require_dominant(lam)
    dim = weyl_dim(rs, lam)
    if dim > budget.dim_cap:
        raise OracleOverflow(
            f"dim V_{lam} = {dim} exceeds budget cap {budget.dim_cap}"
        )
    key = (rs.group_type, lam)
    if key in _freudenthal_cache:
        return _freudenthal_cache[key]

    rank = rs.rank
    gram = rs.gram_fw
    alphas_fw = [
        tuple(rs.cartan[k][i] for k in range(rank)) for i in range(rank)
    ]
    pos_fw = rs.positive_roots_fw

    def norm_shifted(mu):
        x = add_weights(mu, rs.rho)
        return sum(
            x[i] * gram[i][j] * x[j] for i in range(rank) for j in range(rank)
        )

    top_norm = norm_shifted(lam)
    mults: dict[Weight, int] = {lam: 1}
    level = [lam]
    while level:
        candidates = set()
        for mu in level:
            for a in alphas_fw:
                candidates.add(tuple(m - x for m, x in zip(mu, a)))
        level = []
        for mu in sorted(candidates):
            denom = top_norm - norm_shifted(mu)
            if denom == 0:
                continue
            total = 0
            for alpha in pos_fw:
                k = 1
                while True:
                    above = tuple(m + k * a for m, a in zip(mu, alpha))
                    m_above = mults.get(above)
                    if m_above is None:
                        # every weight of the module above mu along alpha is
                        # already computed; a miss ends the alpha-string
                        break
                    total += m_above * sum(
                        above[i] * gram[i][j] * alpha[j]
                        for i in range(rank)
                        for j in range(rank)
                    )
                    k += 1
            m = 2 * total / denom
            assert m.denominator == 1 and m >= 0
            m = int(m)
            if m > 0:
                mults[mu] = m
                level.append(mu)
                if len(mults) > budget.weight_support_cap:
                    raise OracleOverflow("weight support exceeds budget cap")
    assert sum(mults.values()) == dim
    _freudenthal_cache[key] = mults
    return mults


def _dot_regularize(rs: RootSystem, chi_rho: Weight):
    """Bring chi + rho to the dominant chamber, tracking the sign.

    Returns (sign, dominant highest weight) or None when singular.
    """
    x = chi_rho
    sign = 1
    while True:
        if any(c == 0 for c in x):
            return None
        for i, c in enumerate(x):
            if c < 0:
                x = rs.simple_reflect(i, x)
                sign = -sign
                break
        else:
            return sign, tuple(c - 1 for c in x)


_decompose_cache: dict = {}


def decompose(
    rs: RootSystem,
    lam: Weight,
    mu: Weight,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> Decomposition:
    """Exact decomposition of the tensor product of two irreducibles."""
    rs.check_rank(lam)
    rs.check_rank(mu)
    _require_dominant(lam)
    _require_dominant(mu)
    key = (rs.group_type, lam, mu, budget)
    if key in _decompose_cache:
        return _decompose_cache[key]
    if weyl_dim(rs, lam) > budget.dim_cap:
        raise OracleOverflow(f"dim V_{lam} exceeds budget cap {budget.dim_cap}")
    # iterate over the weights of the smaller factor
    small, big = (lam, mu) if weyl_dim(rs, lam) <= weyl_dim(rs, mu) else (mu, lam)
    acc: dict[Weight, int] = {}
    big_rho = add_weights(big, rs.rho)
    for nu, m in weight_multiplicities(rs, small, budget).items():
        reg = _dot_regularize(rs, add_weights(big_rho, nu))
        if reg is None:
            continue
        sign, top = reg
        new = acc.get(top, 0) + sign * m
        if new:
            acc[top] = new
        else:
            acc.pop(top, None)
    assert all(m > 0 for m in acc.values())
    result = Decomposition(tuple(sorted(acc.items())))
    # dimension identity: the decomposition must account for the full space
    assert sum(
        m * weyl_dim(rs, w) for w, m in result.terms
    ) == weyl_dim(rs, lam) * weyl_dim(rs, mu)
    _decompose_cache[key] = result
    return result


def _star(rs: RootSystem, lam: Weight) -> Weight:
    """-w0(lam): the dominant representative of the negated orbit."""
    return rs.dominant_representative(neg_weight(lam))


def invariant_dim(
    rs: RootSystem,
    weights: tuple[Weight, ...],
    budget: OracleBudget = DEFAULT_BUDGET,
) -> int:
    """Dimension of the invariant subspace of the s-fold tensor product."""
    if len(weights) < 2:
        raise ValueError("need at least two weights")
    for w in weights:
        rs.check_rank(w)
        _require_dominant(w)
    if len(weights) == 2:
        return 1 if weights[1] == _star(rs, weights[0]) else 0
    # fold the first s-1 factors, then pair against the last
    current: dict[Weight, int] = {weights[0]: 1}
    for nxt in weights[1:-1]:
        acc: dict[Weight, int] = {}
        for term, mult in current.items():
            for w, m in decompose(rs, term, nxt, budget).terms:
                acc[w] = acc.get(w, 0) + mult * m
        current = acc
    target = _star(rs, weights[-1])
    return current.get(target, 0)


def stable_mult_probe(
    rs: RootSystem,
    weights: tuple[Weight, ...],
    K: int,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> list[tuple[int, int]]:
    """Invariant dimensions of the k-scaled triple for k = 1..K.

    Raises OracleOverflow carrying the partial list if the budget runs out.
    """
    if K < 1:
        raise ValueError("scaling depth must be at least 1")
    out: list[tuple[int, int]] = []
    for k in range(1, K + 1):
        scaled = tuple(tuple(k * c for c in w) for w in weights)
        try:
            out.append((k, invariant_dim(rs, scaled, budget)))
        except OracleOverflow as exc:
            raise OracleOverflow(str(exc), partial=out) from None
    return out
