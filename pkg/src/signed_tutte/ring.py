"""Exact sparse polynomials over the integers.

``PolyZ`` is a multivariate polynomial over a fixed, ordered variable set
(the eight signed Tutte variables by default), ``LaurentZ`` a one-variable
Laurent polynomial.  Coefficients are Python ints, so nothing overflows.
Both types are immutable; every operation returns a new value.
"""

from __future__ import annotations

import re

SIGNED_VARS = ("x+", "x-", "y+", "y-", "A+", "A-", "B+", "B-")
UNSIGNED_VARS = ("x", "y")

# debug assertion only: a total degree above this points at a runaway loop
_DEGREE_SANITY = 1 << 20


class UsageError(ValueError):
    """Operands or arguments that do not fit the operation."""


class ParseError(ValueError):
    pass


def _grlex_key(exps):
    # descending total degree, then descending lex over the varset order
    return (-sum(exps), tuple(-e for e in exps))


class PolyZ:
    """Sparse polynomial with integer coefficients.

    ``terms`` maps exponent tuples (one entry per variable in ``varset``) to
    nonzero ints.  Equality is equality of the term maps.
    """

    __slots__ = ("varset", "terms", "_hash")

    def __init__(self, terms=None, varset=SIGNED_VARS):
        self.varset = tuple(varset)
        n = len(self.varset)
        clean = {}
        if terms:
            for exps, c in dict(terms).items():
                if c:
                    exps = tuple(exps)
                    if len(exps) != n:
                        raise UsageError(f"exponent vector {exps} does not match varset {self.varset}")
                    clean[exps] = c
        self.terms = clean
        self._hash = None

    # constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, terms, varset):
        # trusted fast path: terms already has no zero coefficients
        p = object.__new__(cls)
        p.varset = varset
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c, varset=SIGNED_VARS):
        varset = tuple(varset)
        return cls._raw({(0,) * len(varset): c} if c else {}, varset)

    @classmethod
    def var(cls, name, varset=SIGNED_VARS):
        varset = tuple(varset)
        if name not in varset:
            raise UsageError(f"unknown variable {name!r}")
        exps = [0] * len(varset)
        exps[varset.index(name)] = 1
        return cls._raw({tuple(exps): 1}, varset)

    @classmethod
    def monomial(cls, powers, coeff=1, varset=SIGNED_VARS):
        """Build ``coeff * prod(v**k)`` from a ``{name: k}`` mapping."""
        varset = tuple(varset)
        exps = [0] * len(varset)
        for name, k in powers.items():
            if name not in varset:
                raise UsageError(f"unknown variable {name!r}")
            exps[varset.index(name)] += k
        return cls._raw({tuple(exps): coeff} if coeff else {}, varset)

    @classmethod
    def parse(cls, text, varset=SIGNED_VARS):
        return parse_poly(text, varset)

    # queries ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, names):
        """Set of total degrees in the variables ``names`` over all monomials."""
        idx = [self.varset.index(n) for n in names]
        return {sum(e[i] for i in idx) for e in self.terms}

    def variables(self):
        """Names of the variables that occur with positive exponent."""
        seen = [False] * len(self.varset)
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    seen[i] = True
        return {v for v, s in zip(self.varset, seen) if s}

    def coefficient(self, powers):
        exps = [0] * len(self.varset)
        for name, k in powers.items():
            exps[self.varset.index(name)] = k
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]))

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PolyZ):
            if other.varset != self.varset:
                raise UsageError(f"varset mismatch: {self.varset} vs {other.varset}")
            return other
        if isinstance(other, int):
            return PolyZ.const(other, self.varset)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return PolyZ._raw(out, self.varset)

    __radd__ = __add__

    def __neg__(self):
        return PolyZ._raw({e: -c for e, c in self.terms.items()}, self.varset)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return PolyZ._raw({}, self.varset)
            return PolyZ._raw({e: c * other for e, c in self.terms.items()}, self.varset)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([i + j for i, j in zip(ea, eb)])
                out[e] = get(e, 0) + ca * cb
        return PolyZ._raw({e: c for e, c in out.items() if c}, self.varset)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise UsageError("exponent must be a non-negative int")
        result = PolyZ.const(1, self.varset)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyZ.const(other, self.varset)
        if not isinstance(other, PolyZ):
            return NotImplemented
        return self.varset == other.varset and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self.terms.items())))
        return self._hash

    # substitution -------------------------------------------------------

    def substitute(self, images, target=None):
        return poly_substitute(self, images, target)

    # rendering ----------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"PolyZ({format_poly(self)!r})"


def poly_substitute(p, images, target=None):
    """Image of ``p`` under the ring map sending each variable to ``images[v]``.

    Variables missing from ``images`` are kept as they are, which requires the
    target varset to contain them.  All images must share one varset.
    """
    imgs = {}
    tvars = None if target is None else tuple(target)
    for name, img in images.items():
        if name not in p.varset:
            raise UsageError(f"image given for unknown variable {name!r}")
        if isinstance(img, int):
            imgs[name] = img
            continue
        if tvars is None:
            tvars = img.varset
        elif img.varset != tvars:
            raise UsageError("substitution images do not share one varset")
        imgs[name] = img
    if tvars is None:
        tvars = p.varset

    used = p.variables()
    factors = []
    for i, name in enumerate(p.varset):
        if name in imgs:
            img = imgs[name]
            factors.append(PolyZ.const(img, tvars) if isinstance(img, int) else img)
        elif name in used:
            if name not in tvars:
                raise UsageError(f"no image for variable {name!r}")
            factors.append(PolyZ.var(name, tvars))
        else:
            factors.append(None)

    # group terms by their exponent on each variable so powers are built once
    power_cache = [dict() for _ in p.varset]

    def power(i, k):
        cache = power_cache[i]
        if k not in cache:
            if k == 1:
                cache[k] = factors[i]
            elif k - 1 in cache:
                cache[k] = cache[k - 1] * factors[i]
            else:
                cache[k] = factors[i] ** k
        return cache[k]

    # Horner-like split on the first variable keeps intermediate products small
    out = PolyZ.const(0, tvars)
    partial = {}
    for exps, c in p.terms.items():
        partial.setdefault(exps[1:], {})[exps[0]] = c
    one = PolyZ.const(1, tvars)
    for rest, head in partial.items():
        tail = one
        for j, k in enumerate(rest, start=1):
            if k:
                tail = tail * power(j, k)
        inner = PolyZ.const(0, tvars)
        for k0, c in head.items():
            inner = inner + (power(0, k0) * c if k0 else PolyZ.const(c, tvars))
        out = out + inner * tail
    assert out.total_degree() < _DEGREE_SANITY
    return out


def var(name, varset=SIGNED_VARS):
    return PolyZ.var(name, varset)


def signed_vars():
    """The eight signed variables as a dict of ``PolyZ``."""
    return {v: PolyZ.var(v) for v in SIGNED_VARS}


# ---------------------------------------------------------------- Laurent


class LaurentZ:
    """Laurent polynomial in one variable; ``terms`` maps int exponents to ints."""

    __slots__ = ("terms", "varname")

    def __init__(self, terms=None, varname="A"):
        self.terms = {int(k): c for k, c in dict(terms or {}).items() if c}
        self.varname = varname

    @classmethod
    def monomial(cls, exp, coeff=1, varname="A"):
        return cls({exp: coeff}, varname)

    @classmethod
    def const(cls, c, varname="A"):
        return cls({0: c}, varname)

    @classmethod
    def parse(cls, text, varname="A"):
        return parse_laurent(text, varname)

    def _check(self, other):
        if isinstance(other, int):
            return LaurentZ.const(other, self.varname)
        if isinstance(other, LaurentZ):
            if other.varname != self.varname:
                raise UsageError(f"variable mismatch: {self.varname} vs {other.varname}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentZ(out, self.varname)

    __radd__ = __add__

    def __neg__(self):
        return LaurentZ({k: -c for k, c in self.terms.items()}, self.varname)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentZ(out, self.varname)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            raise UsageError("exponent must be an int")
        if k < 0:
            if len(self.terms) != 1:
                raise UsageError("only monomials can be inverted")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise UsageError("only unit monomials can be inverted")
            return LaurentZ({e * k: c ** -k}, self.varname)
        result = LaurentZ.const(1, self.varname)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k, sign=1):
        """Multiply by ``sign * var**k``."""
        return LaurentZ({e + k: sign * c for e, c in self.terms.items()}, self.varname)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentZ.const(other, self.varname)
        if not isinstance(other, LaurentZ):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def degree_range(self):
        if not self.terms:
            raise ArithmeticError("degree range of the zero polynomial")
        return min(self.terms), max(self.terms)

    def breadth(self):
        lo, hi = self.degree_range()
        return hi - lo

    def coefficient(self, exp):
        return self.terms.get(exp, 0)

    def coefficients(self):
        """Dense coefficient list from the lowest to the highest degree."""
        lo, hi = self.degree_range()
        return [self.terms.get(k, 0) for k in range(lo, hi + 1)]

    def reexpress(self, factor, varname=None):
        """Rename ``var**n`` to ``newvar**(factor*n)``."""
        if factor == 0:
            raise UsageError("exponent factor must be nonzero")
        return LaurentZ({factor * k: c for k, c in self.terms.items()}, varname or self.varname)

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentZ({format_laurent(self)!r}, {self.varname!r})"


def laurent_reexpress(p, factor, varname=None):
    return p.reexpress(factor, varname)


def quarter_to_t(p, varname="t"):
    """Turn a Laurent polynomial in q = t**(1/4) into one in t.

    Every exponent must be divisible by 4; anything else means the input was
    a link or something upstream went wrong.
    """
    bad = [k for k in p.terms if k % 4]
    if bad:
        raise ArithmeticError(f"non-integral t exponents: {sorted(k / 4 for k in bad)}")
    return LaurentZ({k // 4: c for k, c in p.terms.items()}, varname)


# ---------------------------------------------------------------- text I/O


def _format_coeff_monomial(c, factors):
    if not factors:
        return str(abs(c))
    body = "*".join(factors)
    return body if abs(c) == 1 else f"{abs(c)}*{body}"


def _join_signed(pieces):
    if not pieces:
        return "0"
    out = []
    for i, (c, body) in enumerate(pieces):
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def format_poly(p):
    pieces = []
    for exps, c in p.sorted_terms():
        factors = []
        for name, k in zip(p.varset, exps):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        pieces.append((c, _format_coeff_monomial(c, factors)))
    return _join_signed(pieces)


def format_laurent(p, descending=True):
    pieces = []
    for k in sorted(p.terms, reverse=descending):
        c = p.terms[k]
        if k == 0:
            factors = []
        elif k == 1:
            factors = [p.varname]
        else:
            factors = [f"{p.varname}^{k}"]
        pieces.append((c, _format_coeff_monomial(c, factors)))
    return _join_signed(pieces)


_INT = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_~]*")


def _tokenize(text, varset):
    s = "".join(text.split())
    toks = []
    i = 0
    names = set(varset)
    while i < len(s):
        ch = s[i]
        if ch.isdigit():
            m = _INT.match(s, i)
            toks.append(("int", int(m.group())))
            i = m.end()
        elif ch.isalpha():
            m = _NAME.match(s, i)
            name = m.group()
            j = m.end()
            if j < len(s) and s[j] in "+-" and name + s[j] in names:
                name += s[j]
                j += 1
            if name not in names:
                raise ParseError(f"unknown variable {name!r} at offset {i}")
            toks.append(("var", name))
            i = j
        elif ch in "+-*^()":
            toks.append((ch, ch))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at offset {i}")
    return toks


def _parse_terms(text, varset, allow_negative_exponents):
    """Yield ``(coeff, {var: exp})`` pairs from a sum-of-monomials string."""
    toks = _tokenize(text, varset)
    if not toks:
        raise ParseError("empty polynomial text")
    pos = 0
    out = []

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    while pos < len(toks):
        sign = 1
        while peek() in ("+", "-"):
            if toks[pos][0] == "-":
                sign = -sign
            pos += 1
        coeff = sign
        powers = {}
        seen_factor = False
        while True:
            kind = peek()
            if kind == "*":
                if not seen_factor:
                    raise ParseError("dangling '*'")
                pos += 1
                kind = peek()
                if kind not in ("int", "var"):
                    raise ParseError("expected factor after '*'")
            if kind == "int":
                coeff *= toks[pos][1]
                pos += 1
            elif kind == "var":
                name = toks[pos][1]
                pos += 1
                k = 1
                if peek() == "^":
                    pos += 1
                    neg = False
                    if peek() == "-":
                        neg = True
                        pos += 1
                    elif peek() == "(":
                        raise ParseError("parenthesised exponents are not supported")
                    if peek() != "int":
                        raise ParseError("expected integer exponent")
                    k = toks[pos][1]
                    pos += 1
                    if neg:
                        if not allow_negative_exponents:
                            raise ParseError("negative exponent in a polynomial")
                        k = -k
                powers[name] = powers.get(name, 0) + k
            else:
                break
            seen_factor = True
        if not seen_factor:
            raise ParseError(f"expected a term near token {pos}")
        out.append((coeff, powers))
    return out


def _strip_comments(text):
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def parse_poly(text, varset=SIGNED_VARS):
    """Parse the text produced by ``format_poly`` (whitespace-insensitive).

    Multiplication is written ``*`` or by juxtaposition, powers with ``^``.
    ``#`` starts a comment running to the end of the line.
    """
    varset = tuple(varset)
    terms = {}
    for coeff, powers in _parse_terms(_strip_comments(text), varset, False):
        exps = tuple(powers.get(v, 0) for v in varset)
        terms[exps] = terms.get(exps, 0) + coeff
    return PolyZ(terms, varset)


def parse_laurent(text, varname="A"):
    terms = {}
    for coeff, powers in _parse_terms(_strip_comments(text), (varname,), True):
        k = powers.get(varname, 0)
        terms[k] = terms.get(k, 0) + coeff
    return LaurentZ(terms, varname)
