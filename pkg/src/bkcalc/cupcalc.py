"""Cup-product oracle on H*(G/B) via divided differences.

Schubert classes are represented by exact-rational polynomials in the simple
roots; the class of a point is the product of the positive roots divided by
|W|, and lower-codimension representatives are obtained by applying divided
difference operators along reduced words.  The pairing against the point
class is extracted by the full divided-difference string of the longest
element, which kills the invariant ideal exactly.

This module is the verifier for the inversion-set product in
:mod:`bkcalc.bkring`; the fast path never calls it.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import GroupTooLarge
from .weyl import WeylElement, WeylGroup, _same_group

# polynomial in the simple-root variables: exponent tuple -> coefficient
Poly = dict[tuple[int, ...], Fraction]

DEFAULT_LENGTH_CAP = 24  # l(w0) <= 24, i.e. up to F4


def poly_add(p: Poly, q: Poly, scale: Fraction = Fraction(1)) -> Poly:
    out = dict(p)
    for e, c in q.items():
        new = out.get(e, Fraction(0)) + scale * c
        if new:
            out[e] = new
        else:
            out.pop(e, None)
    return out


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            new = out.get(e, Fraction(0)) + c1 * c2
            if new:
                out[e] = new
            else:
                out.pop(e, None)
    return out


def poly_degree(p: Poly) -> int:
    return max((sum(e) for e in p), default=0)


class SchubertCalculus:
    """Polynomial Schubert-class representatives for one Weyl group."""

    def __init__(self, group: WeylGroup, length_cap: int = DEFAULT_LENGTH_CAP):
        if group.w0.length > length_cap:
            raise GroupTooLarge(
                f"l(w0) = {group.w0.length} exceeds oracle cap {length_cap}"
            )
        self.group = group
        self.rank = group.rs.rank
        self.cartan = group.rs.cartan
        self._reps: dict[WeylElement, Poly] = {}
        self._zero_exp = (0,) * self.rank

    # -- elementary operations --------------------------------------------

    def variable(self, i: int) -> Poly:
        e = tuple(int(j == i) for j in range(self.rank))
        return {e: Fraction(1)}

    def reflect(self, i: int, p: Poly) -> Poly:
        """Substitute s_i: alpha_j -> alpha_j - cartan[i][j] * alpha_i."""
        out: Poly = {}
        for exp, coeff in p.items():
            term: Poly = {self._zero_exp: coeff}
            for j, e in enumerate(exp):
                if e == 0:
                    continue
                if j == i:
                    if e % 2:
                        term = {k: -c for k, c in term.items()}
                    shifted = {}
                    for k, c in term.items():
                        k2 = list(k)
                        k2[i] += e
                        shifted[tuple(k2)] = c
                    term = shifted
                else:
                    # (x_j - a x_i)^e expanded by the binomial theorem
                    a = self.cartan[i][j]
                    lin: Poly = {}
                    for k in range(e + 1):
                        ek = [0] * self.rank
                        ek[j] = e - k
                        ek[i] = k
                        lin[tuple(ek)] = Fraction(math.comb(e, k) * (-a) ** k)
                    term = poly_mul(term, lin)
            out = poly_add(out, term)
        return out

    def divided_difference(self, i: int, p: Poly) -> Poly:
        """(p - s_i p) / alpha_i; exact, degree drops by one."""
        num = poly_add(p, self.reflect(i, p), Fraction(-1))
        out: Poly = {}
        for exp, coeff in num.items():
            assert exp[i] >= 1, "numerator not divisible by the simple root"
            e2 = list(exp)
            e2[i] -= 1
            out[tuple(e2)] = coeff
        return out

    # -- Schubert representatives -----------------------------------------

    def point_class(self) -> Poly:
        """Product of the positive roots over |W|: the class of a point."""
        rs = self.group.rs
        p: Poly = {self._zero_exp: Fraction(1, self.group.order())}
        for root in rs.positive_roots:
            lin = {
                tuple(int(j == k) for j in range(self.rank)): Fraction(c)
                for k, c in enumerate(root)
                if c
            }
            p = poly_mul(p, lin)
        return p

    def representative(self, w: WeylElement) -> Poly:
        """Polynomial representative of the (dimension-indexed) class of w.

        Built by peeling the last letter of the reduced word: the operator
        for letter i maps the representative of w*s_i (one step longer in
        codimension) down from the representative of the identity, which is
        the point class.  Braid invariance makes the result word-independent.
        """
        if w not in self._reps:
            if w.length == 0:
                rep = self.point_class()
            else:
                i = w.word[-1]
                shorter = self.group.from_action(
                    _matmul_cached(w.action, self.group._refl[i])
                )
                rep = self.divided_difference(i, self.representative(shorter))
            self._reps[w] = rep
        return self._reps[w]

    def eval_against_point(self, p: Poly) -> Fraction:
        """Coefficient of the point class in a top-degree polynomial."""
        for i in reversed(self.group.w0.word):
            p = self.divided_difference(i, p)
        assert poly_degree(p) == 0
        return p.get(self._zero_exp, Fraction(0))

    # -- cup products ------------------------------------------------------

    def cup_coefficient(self, u: WeylElement, v: WeylElement, w: WeylElement) -> int:
        """Triple intersection number of the three Schubert classes."""
        _same_group(u, v, w)
        n = self.group.w0.length
        if u.length + v.length + w.length != 2 * n:
            return 0
        p = poly_mul(
            poly_mul(self.representative(u), self.representative(v)),
            self.representative(w),
        )
        val = self.eval_against_point(p)
        assert val.denominator == 1 and val >= 0, (
            "non-integral intersection number: internal error"
        )
        return int(val)

    def cup_product(self, u: WeylElement, v: WeylElement):
        """sigma_u . sigma_v expanded in the Schubert basis."""
        from .bkring import CohomClass
        from .weyl import multiply

        group = _same_group(u, v)
        out = CohomClass.zero(group)
        target = 2 * group.w0.length - u.length - v.length
        for w in group.by_length(target):
            c = self.cup_coefficient(u, v, w)
            if c:
                out.add_term(multiply(group.w0, w), c)
        return out


def _matmul_cached(a, b):
    from .weyl import _matmul

    return _matmul(a, b)


_calc_cache: dict = {}


def schubert_calculus(
    group: WeylGroup, length_cap: int = DEFAULT_LENGTH_CAP
) -> SchubertCalculus:
    key = group.rs.group_type
    if key not in _calc_cache:
        _calc_cache[key] = SchubertCalculus(group, length_cap)
    return _calc_cache[key]


def divided_difference(group: WeylGroup, i: int, p: Poly) -> Poly:
    return schubert_calculus(group).divided_difference(i, p)


def schubert_representative(group: WeylGroup, w: WeylElement) -> Poly:
    return schubert_calculus(group).representative(w)


def cup_coefficient(u: WeylElement, v: WeylElement, w: WeylElement) -> int:
    return schubert_calculus(u.group).cup_coefficient(u, v, w)


def cup_product(u: WeylElement, v: WeylElement):
    return schubert_calculus(u.group).cup_product(u, v)
