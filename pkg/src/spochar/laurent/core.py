"""Sparse exact Laurent polynomials on the half-weight lattice of spo(2n|l).

Variables are formal exponentials of the basis weights: slot k of an exponent
vector holds TWICE the exponent of e^{d_{k+1}} for k < n, and twice the
exponent of e^{e_{k-n+1}} for k >= n.  Doubling keeps the half-integral
exponents that occur in Weyl denominators and in rho (odd l) inside plain
integers; a vector is integral iff every entry is even.

Coefficients are arbitrary-precision integers.  Monomials are ordered by
graded lex (total doubled degree first, then lex), which is total and
multiplicative, so leading-term queries and exact division are reproducible.

The term-level loops live in `_kernel` (compiled, optional) /  `_kernel_py`.
"""

from __future__ import annotations

import heapq
import json
import os
from dataclasses import dataclass, field

if os.environ.get("SPOCHAR_PURE_PYTHON"):
    from . import _kernel_py as _k
    _BACKEND = "python"
else:
    try:
        from . import _kernel as _k  # type: ignore[attr-defined]
        _BACKEND = "c"
    except ImportError:
        from . import _kernel_py as _k
        _BACKEND = "python"


def kernel_backend() -> str:
    """Which term-arithmetic kernel got selected at import ('c' or 'python')."""
    return _BACKEND


class LatticeMismatch(ValueError):
    """Operands live on lattices of different rank."""


class NotDivisible(ArithmeticError):
    """Exact division left a remainder: a formula upstream is wrong."""


def grlex_key(exps):
    return (sum(exps), exps)


def _heap_key(exps):
    # min-heap entry whose order is the reverse of grlex_key
    return (-sum(exps), tuple(-x for x in exps), exps)


class LaurentPoly:
    """Immutable-by-convention sparse Laurent polynomial.

    `terms` maps doubled-exponent tuples of length n+m to nonzero ints.
    Never mutate `terms` after construction; all operations return new
    objects, so values are safe to share across threads.
    """

    __slots__ = ("n", "m", "terms")

    def __init__(self, n, m, terms):
        self.n = n
        self.m = m
        self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n, m):
        return cls(n, m, {})

    @classmethod
    def one(cls, n, m):
        return cls(n, m, {(0,) * (n + m): 1})

    @classmethod
    def monomial(cls, n, m, exps, coef=1):
        exps = tuple(exps)
        if len(exps) != n + m:
            raise LatticeMismatch(f"exponent length {len(exps)} != {n + m}")
        return cls(n, m, {exps: coef} if coef else {})

    # -- basics ------------------------------------------------------------

    @property
    def rank(self):
        return self.n + self.m

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def _check(self, other):
        if self.rank != other.rank:
            raise LatticeMismatch(f"rank {self.rank} vs {other.rank}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return LaurentPoly(self.n, self.m, _k.add_terms(self.terms, other.terms))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly(self.n, self.m, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.n, self.m)
            return LaurentPoly(self.n, self.m, {e: other * c for e, c in self.terms.items()})
        self._check(other)
        return LaurentPoly(self.n, self.m, _k.mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = LaurentPoly.one(self.n, self.m)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def shifted(self, exps, sign=1):
        """Multiply by the monomial sign * x^exps."""
        return LaurentPoly(self.n, self.m, _k.scale_shift_terms(sign, tuple(exps), self.terms))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def leading_term(self):
        """(exponents, coefficient) maximal in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def map_exponents(self, fn):
        """Apply an exponent-tuple map (e.g. a Weyl group element)."""
        out = {}
        for e, c in self.terms.items():
            k = fn(e)
            out[k] = out.get(k, 0) + c
        return LaurentPoly(self.n, self.m, out)

    def is_integral(self):
        """True if every exponent is a genuine (non-half) lattice point."""
        return all(x % 2 == 0 for e in self.terms for x in e)

    # -- queries -------------------------------------------------------------

    def evaluate_at_one(self):
        """Sum of coefficients: the (virtual) dimension of a character."""
        return sum(self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]))

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = []
        for e, c in self.sorted_terms()[:8]:
            mono = []
            for i, x in enumerate(e):
                if x == 0:
                    continue
                name = f"d{i + 1}" if i < self.n else f"e{i - self.n + 1}"
                exp = f"{x // 2}" if x % 2 == 0 else f"{x}/2"
                mono.append(f"{name}^{exp}")
            bits.append(f"{c}*" + ("*".join(mono) if mono else "1"))
        tail = f" ... ({len(self.terms)} terms)" if len(self.terms) > 8 else ""
        return "LaurentPoly(" + " + ".join(bits) + tail + ")"

    # -- serialization --------------------------------------------------------

    def to_json_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, d):
        n, m = d["n"], d["m"]
        return cls(n, m, {tuple(t["exp"]): int(t["coef"]) for t in d["terms"]})

    @classmethod
    def from_json(cls, s):
        return cls.from_json_dict(json.loads(s))


# -- module-level operation functions -------------------------------------------


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def evaluate_at_one(p: LaurentPoly) -> int:
    return p.evaluate_at_one()


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient p / q; raises NotDivisible when no exact quotient exists.

    Both operands are shifted by their minimal exponents into the ordinary
    polynomial ring, where graded-lex is a well-order, then long division by
    the single divisor runs with a lazy-deletion heap tracking the leading
    term of the remainder.  Any failure of leading-monomial or leading-
    coefficient divisibility proves p is not a multiple of q.
    """
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.n, p.m)

    rank = p.rank
    minp = tuple(min(e[i] for e in p.terms) for i in range(rank))
    minq = tuple(min(e[i] for e in q.terms) for i in range(rank))
    phat = {tuple(x - y for x, y in zip(e, minp)): c for e, c in p.terms.items()}
    qhat = {tuple(x - y for x, y in zip(e, minq)): c for e, c in q.terms.items()}

    ltq = max(qhat, key=grlex_key)
    cq = qhat[ltq]

    heap = [_heap_key(e) for e in phat]
    heapq.heapify(heap)
    quot = {}
    while phat:
        e = heapq.heappop(heap)[2]
        c = phat.get(e)
        if c is None:
            continue  # stale heap entry
        t = tuple(x - y for x, y in zip(e, ltq))
        if any(x < 0 for x in t):
            raise NotDivisible(f"leading monomial {e} not divisible by {ltq}")
        f, rem = divmod(c, cq)
        if rem:
            raise NotDivisible(f"leading coefficient {c} not divisible by {cq}")
        quot[t] = f
        for k in _k.axpy_terms(phat, -f, t, qhat):
            heapq.heappush(heap, _heap_key(k))

    shift = tuple(x - y for x, y in zip(minp, minq))
    return LaurentPoly(p.n, p.m, {tuple(x + y for x, y in zip(t, shift)): f for t, f in quot.items()})


# -- factored rational expressions ---------------------------------------------


def first_nonzero(exps):
    for x in exps:
        if x:
            return x
    return 0


def canonicalize_factor(sign, mu):
    """Normalize a factor (1 + sign*e^mu).

    Canonical form requires mu != 0 with negative first nonzero coordinate;
    pulling out the monomial unit uses (1 + s*e^mu) = s*e^mu * (1 + s*e^-mu).
    Returns (unit_shift, unit_sign, (sign, mu_canonical)).
    """
    mu = tuple(mu)
    if all(x == 0 for x in mu):
        raise ValueError("factor exponent must be nonzero")
    if first_nonzero(mu) > 0:
        return mu, sign, (sign, tuple(-x for x in mu))
    return (0,) * len(mu), 1, (sign, mu)


@dataclass
class FactoredRational:
    """unit_sign * x^unit_exp * numerator / prod (1 + sign*e^mu)^count.

    Denominator factors are kept canonical (first nonzero coordinate of mu
    negative) so that common denominators are plain multiset unions.
    """

    numerator: LaurentPoly
    factors: dict = field(default_factory=dict)  # (sign, mu) -> multiplicity
    unit_exp: tuple = None
    unit_sign: int = 1

    def __post_init__(self):
        if self.unit_exp is None:
            self.unit_exp = (0,) * self.numerator.rank
        norm = {}
        shift = list(self.unit_exp)
        sign = self.unit_sign
        for (s, mu), cnt in self.factors.items():
            if cnt < 0:
                raise ValueError("factor multiplicities must be >= 0")
            if cnt == 0:
                continue
            u, us, key = canonicalize_factor(s, mu)
            for i, x in enumerate(u):
                shift[i] -= x * cnt  # unit moves from denominator to the front
            sign *= us**cnt
            norm[key] = norm.get(key, 0) + cnt
        self.factors = norm
        self.unit_exp = tuple(shift)
        self.unit_sign = sign

    def denominator_poly(self) -> LaurentPoly:
        out = LaurentPoly.one(self.numerator.n, self.numerator.m)
        for (s, mu), cnt in self.factors.items():
            f = LaurentPoly.one(self.numerator.n, self.numerator.m) + LaurentPoly.monomial(
                self.numerator.n, self.numerator.m, mu, s
            )
            for _ in range(cnt):
                out = out * f
        return out

    def to_laurent(self) -> LaurentPoly:
        """Clear the denominator exactly (NotDivisible if it does not clear)."""
        num = self.numerator.shifted(self.unit_exp, self.unit_sign)
        return exact_div(num, self.denominator_poly())

    def cleared(self) -> LaurentPoly:
        """unit * numerator * denominator: for cross-multiplied comparisons."""
        return self.numerator.shifted(self.unit_exp, self.unit_sign) * self.denominator_poly()


def rational_sum(terms) -> FactoredRational:
    """Sum of (sign, FactoredRational) over the least common denominator."""
    if not terms:
        raise ValueError("empty sum")
    n, m = terms[0][1].numerator.n, terms[0][1].numerator.m
    common = {}
    for _, fr in terms:
        for key, cnt in fr.factors.items():
            common[key] = max(common.get(key, 0), cnt)
    acc = {}
    for sgn, fr in terms:
        piece = _k.scale_shift_terms(sgn * fr.unit_sign, fr.unit_exp, fr.numerator.terms)
        for key, cnt in common.items():
            missing = cnt - fr.factors.get(key, 0)
            s, mu = key
            for _ in range(missing):
                # piece *= (1 + s*e^mu), done as one shifted self-add
                extra = _k.scale_shift_terms(s, mu, piece)
                piece = _k.add_terms(piece, extra)
        acc = _k.add_terms(acc, piece)
    return FactoredRational(LaurentPoly(n, m, acc), common)


def rational_weyl_sum(terms) -> LaurentPoly:
    """Sum (sign, FactoredRational) terms and clear the common denominator.

    Raises NotDivisible when the alternating sum is not polynomial, which
    always signals an upstream formula error.
    """
    return rational_sum(terms).to_laurent()
