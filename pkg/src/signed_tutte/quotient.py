"""Normal forms in Z[x+-, y+-, A+-, B+-] modulo the two-determinant ideal.

After the shift x~ = x - A, y~ = y - B the ideal is generated by the binomials

    D1 = x~+ * B-  -  x~- * B+
    D2 = A+ * y~-  -  A- * y~+

whose leading terms x~+ B- and A+ y~- share no variable.  Rewriting with
these two rules therefore terminates in a unique normal form, and because
the rules are binomial a monomial always reduces to a single monomial.
"""

from __future__ import annotations

import random

from .ring import SIGNED_VARS, UNSIGNED_VARS, LaurentZ, PolyZ, UsageError

# lex order x~+ > x~- > A+ > A- > y~- > y~+ > B- > B+ (leading terms x~+B-, A+y~-)
TILDE_VARS = ("x~+", "x~-", "A+", "A-", "y~-", "y~+", "B-", "B+")

_XP, _XM, _AP, _AM, _YM, _YP, _BM, _BP = range(8)


def _shift_images():
    t = {v: PolyZ.var(v, TILDE_VARS) for v in TILDE_VARS}
    return {
        "x+": t["x~+"] + t["A+"],
        "x-": t["x~-"] + t["A-"],
        "y+": t["y~+"] + t["B+"],
        "y-": t["y~-"] + t["B-"],
        "A+": t["A+"],
        "A-": t["A-"],
        "B+": t["B+"],
        "B-": t["B-"],
    }


def _unshift_images():
    s = {v: PolyZ.var(v) for v in SIGNED_VARS}
    return {
        "x~+": s["x+"] - s["A+"],
        "x~-": s["x-"] - s["A-"],
        "y~+": s["y+"] - s["B+"],
        "y~-": s["y-"] - s["B-"],
        "A+": s["A+"],
        "A-": s["A-"],
        "B+": s["B+"],
        "B-": s["B-"],
    }


_SHIFT = _shift_images()
_UNSHIFT = _unshift_images()


def reduce_monomial(exps):
    """Normal form of a single tilde-basis monomial (it stays a monomial)."""
    e = list(exps)
    k = min(e[_XP], e[_BM])
    if k:
        e[_XP] -= k
        e[_BM] -= k
        e[_XM] += k
        e[_BP] += k
    k = min(e[_AP], e[_YM])
    if k:
        e[_AP] -= k
        e[_YM] -= k
        e[_AM] += k
        e[_YP] += k
    return tuple(e)


def _reduce_tilde(p):
    out = {}
    for exps, c in p.terms.items():
        r = reduce_monomial(exps)
        s = out.get(r, 0) + c
        if s:
            out[r] = s
        else:
            del out[r]
    return PolyZ(out, TILDE_VARS)


def is_reduced(p):
    return all(
        not (e[_XP] and e[_BM]) and not (e[_AP] and e[_YM]) for e in p.terms
    )


class QuotientElem:
    """An element of the quotient ring, stored as its reduced tilde-basis form."""

    __slots__ = ("nf",)

    def __init__(self, nf):
        if nf.varset != TILDE_VARS:
            raise UsageError("QuotientElem expects a tilde-basis polynomial")
        self.nf = nf if is_reduced(nf) else _reduce_tilde(nf)

    def __eq__(self, other):
        if not isinstance(other, QuotientElem):
            return NotImplemented
        return self.nf == other.nf

    def __hash__(self):
        return hash(self.nf)

    def __add__(self, other):
        return QuotientElem(self.nf + other.nf)

    def __sub__(self, other):
        return QuotientElem(self.nf - other.nf)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuotientElem(self.nf * other)
        return QuotientElem(_reduce_tilde(self.nf * other.nf))

    def is_zero(self):
        return self.nf.is_zero()

    def representative(self):
        return from_quotient(self)

    def __str__(self):
        return str(self.nf)

    def __repr__(self):
        return f"QuotientElem({self.nf})"


def to_quotient(p):
    if p.varset != SIGNED_VARS:
        raise UsageError("to_quotient expects a polynomial over the signed variables")
    return QuotientElem(_reduce_tilde(p.substitute(_SHIFT, TILDE_VARS)))


def from_quotient(q):
    """Display representative over the original variables."""
    return q.nf.substitute(_UNSHIFT, SIGNED_VARS)


def canonical(p):
    """Deterministic representative of the class of ``p``."""
    return from_quotient(to_quotient(p))


def eq_mod_I1(p, q):
    return to_quotient(p - q).is_zero()


def generators():
    """The two defining generators, written over the original variables."""
    v = {n: PolyZ.var(n) for n in SIGNED_VARS}
    det_xb = v["x+"] * v["B-"] - v["x-"] * v["B+"]
    det_ab = v["A+"] * v["B-"] - v["A-"] * v["B+"]
    det_ay = v["A+"] * v["y-"] - v["A-"] * v["y+"]
    return det_xb - det_ab, det_ab - det_ay


def reduce_stepwise(p, rng=None):
    """Reference reducer: apply single rewrite steps in a random order.

    Works term by term on a tilde-basis polynomial, picking a random reducible
    monomial and a random applicable rule each step.  Used to check that the
    closed-form reduction does not depend on the rewrite order.
    """
    rng = rng or random.Random()
    terms = dict(p.terms)
    while True:
        redexes = [e for e in terms if (e[_XP] and e[_BM]) or (e[_AP] and e[_YM])]
        if not redexes:
            return PolyZ(terms, TILDE_VARS)
        e = rng.choice(sorted(redexes))
        rules = []
        if e[_XP] and e[_BM]:
            rules.append(((_XP, _BM), (_XM, _BP)))
        if e[_AP] and e[_YM]:
            rules.append(((_AP, _YM), (_AM, _YP)))
        (d1, d2), (i1, i2) = rng.choice(rules)
        new = list(e)
        new[d1] -= 1
        new[d2] -= 1
        new[i1] += 1
        new[i2] += 1
        new = tuple(new)
        c = terms.pop(e)
        s = terms.get(new, 0) + c
        if s:
            terms[new] = s
        else:
            terms.pop(new, None)


# ---------------------------------------------------------------- specializations

KAUFFMAN_IMAGES = {
    "x+": LaurentZ({-3: -1}),
    "x-": LaurentZ({3: -1}),
    "y+": LaurentZ({3: -1}),
    "y-": LaurentZ({-3: -1}),
    "A+": LaurentZ({1: 1}),
    "A-": LaurentZ({-1: 1}),
    "B+": LaurentZ({-1: 1}),
    "B-": LaurentZ({1: 1}),
}

# exponent of A contributed by each variable, and the sign it carries
_KAUFFMAN_EXP = [(-3, -1), (3, -1), (3, -1), (-3, -1), (1, 1), (-1, 1), (-1, 1), (1, 1)]


def kauffman_specialize(p):
    """Image in Z[A, 1/A] under the bracket substitution."""
    if p.varset != SIGNED_VARS:
        raise UsageError("kauffman_specialize expects a signed polynomial")
    out = {}
    for exps, c in p.terms.items():
        k = 0
        sign = 1
        for (d, s), e in zip(_KAUFFMAN_EXP, exps):
            if e:
                k += d * e
                if s < 0 and e & 1:
                    sign = -sign
        out[k] = out.get(k, 0) + sign * c
    return LaurentZ(out, "A")


def _self_test():
    for g in generators():
        if not kauffman_specialize(g).is_zero():
            raise RuntimeError("bracket substitution does not kill the ideal")


_self_test()


_NEGATIVE = {"x-", "y-", "A-", "B-"}


def unsigned_phi(p):
    """x+ -> x, y+ -> y, A+ -> 1, B+ -> 1 on polynomials in positive variables."""
    if p.varset != SIGNED_VARS:
        raise UsageError("unsigned_phi expects a signed polynomial")
    bad = p.variables() & _NEGATIVE
    if bad:
        raise UsageError(f"negative variables present: {sorted(bad)}")
    out = {}
    for exps, c in p.terms.items():
        key = (exps[0], exps[2])
        out[key] = out.get(key, 0) + c
    return PolyZ(out, UNSIGNED_VARS)
