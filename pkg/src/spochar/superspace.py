"""Explicit realization of the super exterior algebra of the natural module:
commuting variables x_1..x_m, xb_1..xb_m (and x0 for odd l) tensor Grassmann
variables xi_1..xi_n, xib_1..xib_n, with weights wt(xi_j) = d_j,
wt(xib_j) = -d_j, wt(x_i) = e_i, wt(xb_i) = -e_i, wt(x0) = 0.

Monomials are flat exponent tuples in the fixed generator order
x < xb < x0 < xi < xib; Grassmann slots hold bits.  Coefficients are exact
rationals.  Odd operators act from the left with Koszul signs counted in the
REALIZED parity (Grassmann bits only); the one global sign convention is
pinned by the Laplacian-kernel calibration test, not by decree.

All linear algebra is exact (Fraction Gaussian elimination), so the
irreducibility verdicts below are certificates, not numerics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPoly, grlex_key
from .linalg import nullspace
from .rootdata import Algebra, Weight, is_dominant, positive_roots, simple_roots, weyl_group


class DimensionGuard(RuntimeError):
    """Requested degree component exceeds the desk-scale bound."""


# -- generator bookkeeping ---------------------------------------------------------


def _layout(alg: Algebra):
    """(num_commuting, grassmann_start, total_slots)."""
    nc = 2 * alg.m + (1 if alg.odd else 0)
    return nc, nc, nc + 2 * alg.n


def gen_count(alg: Algebra) -> int:
    return _layout(alg)[2]


def gen_name(alg: Algebra, slot: int) -> str:
    m = alg.m
    if slot < m:
        return f"x{slot + 1}"
    if slot < 2 * m:
        return f"xb{slot - m + 1}"
    nc = _layout(alg)[0]
    if alg.odd and slot == 2 * m:
        return "x0"
    j = slot - nc
    return f"xi{j + 1}" if j < alg.n else f"xib{j - alg.n + 1}"


def gen_weight_doubled(alg: Algebra, slot: int):
    """Doubled weight of one generator, in the d/e coordinate order."""
    v = [0] * alg.rank
    m, nc = alg.m, _layout(alg)[0]
    if slot < m:
        v[alg.n + slot] = 2
    elif slot < 2 * m:
        v[alg.n + slot - m] = -2
    elif alg.odd and slot == 2 * m:
        pass
    else:
        j = slot - nc
        if j < alg.n:
            v[j] = 2
        else:
            v[j - alg.n] = -2
    return tuple(v)


def monomial_weight_doubled(alg: Algebra, mono):
    v = [0] * alg.rank
    for slot, e in enumerate(mono):
        if e:
            w = gen_weight_doubled(alg, slot)
            for i, x in enumerate(w):
                v[i] += e * x
    return tuple(v)


def monomial_degree(mono):
    return sum(mono)


def format_monomial(alg: Algebra, mono) -> str:
    bits = []
    for slot, e in enumerate(mono):
        if not e:
            continue
        name = gen_name(alg, slot)
        bits.append(name if e == 1 else f"{name}^{e}")
    return "*".join(bits) if bits else "1"


# -- elements ---------------------------------------------------------------------


class SuperElement:
    """Exact-rational element of the polynomial x Grassmann algebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = {t: c for t, c in terms.items() if c}

    @classmethod
    def zero(cls, alg):
        return cls(alg, {})

    @classmethod
    def one(cls, alg):
        return cls(alg, {(0,) * gen_count(alg): Fraction(1)})

    @classmethod
    def generator(cls, alg, slot):
        t = [0] * gen_count(alg)
        t[slot] = 1
        return cls(alg, {tuple(t): Fraction(1)})

    @classmethod
    def from_name(cls, alg, name):
        for slot in range(gen_count(alg)):
            if gen_name(alg, slot) == name:
                return cls.generator(alg, slot)
        raise ValueError(f"unknown generator {name!r}")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for t, c in other.terms.items():
            v = out.get(t, 0) + c
            if v:
                out[t] = v
            elif t in out:
                del out[t]
        return SuperElement(self.alg, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SuperElement(self.alg, {t: -c for t, c in self.terms.items()})

    def scale(self, r):
        r = Fraction(r)
        if r == 0:
            return SuperElement.zero(self.alg)
        return SuperElement(self.alg, {t: r * c for t, c in self.terms.items()})

    def __rmul__(self, r):
        if isinstance(r, (int, Fraction)):
            return self.scale(r)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        gs = _layout(self.alg)[1]
        out = {}
        for ta, ca in self.terms.items():
            for tb, cb in other.terms.items():
                merged, sign = _merge_monomials(ta, tb, gs)
                if merged is None:
                    continue
                v = out.get(merged, 0) + sign * ca * cb
                if v:
                    out[merged] = v
                elif merged in out:
                    del out[merged]
        return SuperElement(self.alg, out)

    def __eq__(self, other):
        return isinstance(other, SuperElement) and self.alg == other.alg and self.terms == other.terms

    def grassmann_parity(self):
        """Parity of the Grassmann degree; None if mixed."""
        gs = _layout(self.alg)[1]
        ps = {sum(t[gs:]) % 2 for t in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def weight(self):
        """Doubled weight if homogeneous, else None."""
        ws = {monomial_weight_doubled(self.alg, t) for t in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def character(self) -> LaurentPoly:
        terms = {}
        for t in self.terms:
            w = monomial_weight_doubled(self.alg, t)
            terms[w] = terms.get(w, 0) + 1
        return LaurentPoly(self.alg.n, self.alg.m, terms)

    def __repr__(self):
        if not self.terms:
            return "SuperElement(0)"
        bits = []
        for t, c in sorted(self.terms.items())[:6]:
            bits.append(f"{c}*{format_monomial(self.alg, t)}")
        tail = " ..." if len(self.terms) > 6 else ""
        return "SuperElement(" + " + ".join(bits) + tail + ")"


def _merge_monomials(ta, tb, gs):
    """Concatenate two canonical monomials; None on Grassmann overlap.
    The Koszul sign counts, for every bit of tb, the bits of ta above it."""
    out = list(ta)
    sign = 1
    above = 0
    for p in range(len(ta) - 1, gs - 1, -1):
        if tb[p]:
            if ta[p]:
                return None, 0
            out[p] = 1
            if above % 2:
                sign = -sign
        if ta[p]:
            above += 1
    for p in range(gs):
        out[p] = ta[p] + tb[p]
    return tuple(out), sign


# -- operators -------------------------------------------------------------------


class LinearOperator:
    def apply(self, el: SuperElement) -> SuperElement:
        raise NotImplementedError

    def __call__(self, el):
        return self.apply(el)


@dataclass(frozen=True)
class Derivation(LinearOperator):
    """Superderivation given by generator images, extended by the graded
    Leibniz rule; parity 1 operators pick up a sign per Grassmann bit they
    cross."""

    alg: Algebra
    parity: int
    images: tuple  # tuple of (slot, SuperElement)
    name: str = ""

    def image_map(self):
        return dict(self.images)

    def apply(self, el: SuperElement) -> SuperElement:
        alg = self.alg
        gs = _layout(alg)[1]
        total = SuperElement.zero(alg)
        imgs = dict(self.images)
        for mono, coef in el.terms.items():
            for slot, img in imgs.items():
                e = mono[slot]
                if not e:
                    continue
                if slot >= gs:
                    crossed = sum(mono[gs:slot])
                    sign = -1 if (self.parity and crossed % 2) else 1
                    mult = Fraction(sign)
                    left = mono[:slot] + (0,) * (len(mono) - slot)
                else:
                    mult = Fraction(e)
                    left = mono[:slot] + (e - 1,) + (0,) * (len(mono) - slot - 1)
                right = (0,) * (slot + 1) + mono[slot + 1:]
                piece = SuperElement(alg, {left: coef * mult}) * img
                piece = piece * SuperElement(alg, {right: Fraction(1)})
                total = total + piece
        return total

    def __repr__(self):
        return f"Derivation({self.name or 'anon'})"


@dataclass(frozen=True)
class OperatorSum(LinearOperator):
    """Sum of scaled compositions (applied right to left)."""

    parts: tuple  # tuple of (Fraction, tuple-of-operators)
    name: str = ""

    def apply(self, el):
        total = None
        for coef, chain in self.parts:
            cur = el
            for op in reversed(chain):
                cur = op.apply(cur)
            cur = cur.scale(coef)
            total = cur if total is None else total + cur
        return total

    def __repr__(self):
        return f"OperatorSum({self.name or 'anon'})"


def partial(alg: Algebra, slot: int) -> Derivation:
    """Left partial derivative with respect to one generator."""
    gs = _layout(alg)[1]
    parity = 1 if slot >= gs else 0
    return Derivation(alg, parity, ((slot, SuperElement.one(alg)),), f"d/d{gen_name(alg, slot)}")


def laplacian(alg: Algebra) -> OperatorSum:
    """Degree -2 invariant operator: sum_j d_xi_j d_xib_j
    - sum_i d_x_i d_xb_i - 1/2 d_x0^2 (the x0 term only for odd l)."""
    m, nc = alg.m, _layout(alg)[0]
    parts = []
    for j in range(alg.n):
        parts.append((Fraction(1), (partial(alg, nc + j), partial(alg, nc + alg.n + j))))
    for i in range(m):
        parts.append((Fraction(-1), (partial(alg, i), partial(alg, m + i))))
    if alg.odd:
        parts.append((Fraction(-1, 2), (partial(alg, 2 * m), partial(alg, 2 * m))))
    return OperatorSum(tuple(parts), "laplacian")


# -- the g-action on generators ------------------------------------------------------


def _slot_x(alg, i):
    return i


def _slot_xb(alg, i):
    return alg.m + i


def _slot_x0(alg):
    return 2 * alg.m


def _slot_xi(alg, j):
    return _layout(alg)[0] + j


def _slot_xib(alg, j):
    return _layout(alg)[0] + alg.n + j


def root_operator(alg: Algebra, root: Weight) -> Derivation:
    """First-order superderivation realizing the root vector on the natural
    module, signs matched to the standard matrix realization (odd operators
    carry the parity-shift sign on realized-odd sources)."""
    n = alg.n
    a = [x // 2 for x in root.doubled[:n]]
    b = [x // 2 for x in root.doubled[n:]]
    G = lambda slot: SuperElement.generator(alg, slot)

    def drv(parity, *imgs):
        label = root.format()
        return Derivation(alg, parity, tuple(imgs), f"E[{label}]")

    nz_a = [(i, c) for i, c in enumerate(a) if c]
    nz_b = [(i, c) for i, c in enumerate(b) if c]

    if not nz_b and len(nz_a) == 1 and abs(nz_a[0][1]) == 2:  # +/- 2d_i
        i = nz_a[0][0]
        if nz_a[0][1] > 0:
            return drv(0, (_slot_xib(alg, i), G(_slot_xi(alg, i))))
        return drv(0, (_slot_xi(alg, i), G(_slot_xib(alg, i))))
    if not nz_b and len(nz_a) == 2:  # d_i +/- d_j
        (i, ci), (j, cj) = nz_a
        if ci == 1 and cj == -1:
            return drv(0, (_slot_xi(alg, j), G(_slot_xi(alg, i))),
                       (_slot_xib(alg, i), -1 * G(_slot_xib(alg, j))))
        if ci == -1 and cj == 1:
            return drv(0, (_slot_xi(alg, i), G(_slot_xi(alg, j))),
                       (_slot_xib(alg, j), -1 * G(_slot_xib(alg, i))))
        if ci == 1 and cj == 1:
            return drv(0, (_slot_xib(alg, j), G(_slot_xi(alg, i))),
                       (_slot_xib(alg, i), G(_slot_xi(alg, j))))
        if ci == -1 and cj == -1:
            return drv(0, (_slot_xi(alg, j), G(_slot_xib(alg, i))),
                       (_slot_xi(alg, i), G(_slot_xib(alg, j))))
    if not nz_a and len(nz_b) == 2:  # e_i +/- e_j
        (i, ci), (j, cj) = nz_b
        if ci == 1 and cj == -1:
            return drv(0, (_slot_x(alg, j), G(_slot_x(alg, i))),
                       (_slot_xb(alg, i), -1 * G(_slot_xb(alg, j))))
        if ci == -1 and cj == 1:
            return drv(0, (_slot_x(alg, i), G(_slot_x(alg, j))),
                       (_slot_xb(alg, j), -1 * G(_slot_xb(alg, i))))
        if ci == 1 and cj == 1:
            return drv(0, (_slot_xb(alg, j), G(_slot_x(alg, i))),
                       (_slot_xb(alg, i), -1 * G(_slot_x(alg, j))))
        if ci == -1 and cj == -1:
            return drv(0, (_slot_x(alg, j), G(_slot_xb(alg, i))),
                       (_slot_x(alg, i), -1 * G(_slot_xb(alg, j))))
    if not nz_a and len(nz_b) == 1 and abs(nz_b[0][1]) == 1 and alg.odd:  # +/- e_i
        i = nz_b[0][0]
        if nz_b[0][1] > 0:
            return drv(0, (_slot_x0(alg), G(_slot_x(alg, i))),
                       (_slot_xb(alg, i), -1 * G(_slot_x0(alg))))
        return drv(0, (_slot_x(alg, i), G(_slot_x0(alg))),
                   (_slot_x0(alg), -1 * G(_slot_xb(alg, i))))
    if len(nz_a) == 1 and len(nz_b) == 1:  # odd roots +/- d_j +/- e_i
        j, cj = nz_a[0]
        i, ci = nz_b[0]
        if cj == 1 and ci == -1:  # d_j - e_i
            return drv(1, (_slot_x(alg, i), G(_slot_xi(alg, j))),
                       (_slot_xib(alg, j), -1 * G(_slot_xb(alg, i))))
        if cj == -1 and ci == 1:  # e_i - d_j
            return drv(1, (_slot_xi(alg, j), G(_slot_x(alg, i))),
                       (_slot_xb(alg, i), G(_slot_xib(alg, j))))
        if cj == 1 and ci == 1:  # d_j + e_i
            return drv(1, (_slot_xb(alg, i), G(_slot_xi(alg, j))),
                       (_slot_xib(alg, j), -1 * G(_slot_x(alg, i))))
        if cj == -1 and ci == -1:  # -d_j - e_i
            return drv(1, (_slot_xi(alg, j), -1 * G(_slot_xb(alg, i))),
                       (_slot_x(alg, i), -1 * G(_slot_xib(alg, j))))
    if len(nz_a) == 1 and not nz_b and abs(nz_a[0][1]) == 1 and alg.odd:  # +/- d_j
        j = nz_a[0][0]
        if nz_a[0][1] > 0:
            return drv(1, (_slot_x0(alg), G(_slot_xi(alg, j))),
                       (_slot_xib(alg, j), -1 * G(_slot_x0(alg))))
        return drv(1, (_slot_xi(alg, j), -1 * G(_slot_x0(alg))),
                   (_slot_x0(alg), -1 * G(_slot_xib(alg, j))))
    raise ValueError(f"{root.format()} is not a root of {alg}")


@dataclass
class GAction:
    """Root operators and the Cartan (weight reading) of the g-action."""

    alg: Algebra
    raising: dict  # Weight -> Derivation, positive roots
    lowering: dict  # Weight -> Derivation, negative roots

    def cartan_eigenvalue(self, h_index: int, mono) -> Fraction:
        """Eigenvalue of the h_index-th coordinate weight functional."""
        return Fraction(monomial_weight_doubled(self.alg, mono)[h_index], 2)


def g_action(alg: Algebra) -> GAction:
    pos = positive_roots(alg)
    raising = {}
    lowering = {}
    for r in list(pos.even) + list(pos.odd):
        raising[r] = root_operator(alg, r)
        lowering[-r] = root_operator(alg, -r)
    return GAction(alg, raising, lowering)


def simple_root_operators(alg: Algebra):
    """(raising, lowering) derivations for the standard simple roots."""
    ups = [root_operator(alg, s) for s in simple_roots(alg)]
    downs = [root_operator(alg, -s) for s in simple_roots(alg)]
    return ups, downs


# -- degree components and kernels -----------------------------------------------------


@lru_cache(maxsize=None)
def degree_basis(alg: Algebra, k: int, bound: int = 20000):
    """Canonical monomial basis of the degree-k component."""
    if k < 0:
        return ()
    nc, gs, total = _layout(alg)
    ngr = total - gs
    out = []
    for gbits in range(min(k, ngr), -1, -1):
        rem = k - gbits
        for positions in itertools.combinations(range(ngr), gbits):
            for comp in _compositions(rem, nc):
                mono = list(comp) + [0] * ngr
                for p in positions:
                    mono[gs + p] = 1
                out.append(tuple(mono))
    if len(out) > bound:
        raise DimensionGuard(f"dim = {len(out)} exceeds bound {bound}")
    return tuple(sorted(out))


def _compositions(total, slots):
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def char_of_degree(alg: Algebra, k: int) -> LaurentPoly:
    """Character of the degree-k component from the monomial weights."""
    terms = {}
    for mono in degree_basis(alg, k):
        w = monomial_weight_doubled(alg, mono)
        terms[w] = terms.get(w, 0) + 1
    return LaurentPoly(alg.n, alg.m, terms)


def _matrix_of(alg, op, domain, codomain_index):
    rows = [[Fraction(0)] * len(domain) for _ in range(len(codomain_index))]
    for col, mono in enumerate(domain):
        img = op.apply(SuperElement(alg, {mono: Fraction(1)}))
        for t, c in img.terms.items():
            rows[codomain_index[t]][col] = c
    return rows


def kernel_basis(alg: Algebra, k: int, bound: int = 20000):
    """Exact basis of ker(Laplacian) on the degree-k component.

    Asserts the expected dimension dim(k) - dim(k-2), i.e. surjectivity of
    the Laplacian one degree up.
    """
    dom = degree_basis(alg, k, bound)
    cod = degree_basis(alg, k - 2, bound)
    cod_index = {t: i for i, t in enumerate(cod)}
    lap = laplacian(alg)
    mat = _matrix_of(alg, lap, dom, cod_index)
    if not cod:
        return [SuperElement(alg, {t: Fraction(1)}) for t in dom]
    basis = nullspace(mat)
    if len(basis) != len(dom) - len(cod):
        raise ArithmeticError(f"Laplacian not surjective in degree {k}: kernel dim {len(basis)}")
    return [SuperElement(alg, {dom[i]: v[i] for i in range(len(dom)) if v[i]}) for v in basis]


def _group_by_weight(alg, monomials):
    groups = {}
    for t in monomials:
        groups.setdefault(monomial_weight_doubled(alg, t), []).append(t)
    return groups


def singular_vectors(alg: Algebra, k: int, bound: int = 20000):
    """Vectors of ker(Laplacian) in degree k annihilated by every positive
    root operator, grouped by weight.  Returns {Weight: [SuperElement, ...]},
    graded-lex descending by weight."""
    dom_all = degree_basis(alg, k, bound)
    ups, _ = simple_root_operators(alg)
    lap = laplacian(alg)
    groups = _group_by_weight(alg, dom_all)
    out = {}
    for wt in sorted(groups, key=grlex_key, reverse=True):
        dom = sorted(groups[wt])
        stacked = []
        ops = [lap] + ups
        for op in ops:
            images = [op.apply(SuperElement(alg, {t: Fraction(1)})) for t in dom]
            cod = sorted({t for img in images for t in img.terms})
            cod_index = {t: i for i, t in enumerate(cod)}
            block = [[Fraction(0)] * len(dom) for _ in range(len(cod))]
            for col, img in enumerate(images):
                for t, c in img.terms.items():
                    block[cod_index[t]][col] = c
            stacked.extend(block)
        if not stacked:
            vecs = [SuperElement(alg, {t: Fraction(1)}) for t in dom]
        else:
            vecs = [
                SuperElement(alg, {dom[i]: v[i] for i in range(len(dom)) if v[i]})
                for v in nullspace(stacked)
            ]
        if vecs:
            out[Weight(alg, wt)] = vecs
    return out


# -- cyclic spans and irreducibility ----------------------------------------------------


class _SparseSpan:
    """Row space of SuperElements with sparse Gaussian elimination;
    pivot = largest monomial in tuple order."""

    def __init__(self):
        self.pivots = {}  # monomial -> reduced dict(monomial -> Fraction)

    def _reduce(self, vec):
        vec = dict(vec)
        while vec:
            lead = max(vec)
            piv = self.pivots.get(lead)
            if piv is None:
                return vec, lead
            c = vec[lead]
            for t, pc in piv.items():
                v = vec.get(t, 0) - c * pc
                if v:
                    vec[t] = v
                elif t in vec:
                    del vec[t]
        return None, None

    def add(self, el: SuperElement) -> bool:
        """Insert; True if it enlarged the span."""
        vec, lead = self._reduce(el.terms)
        if vec is None:
            return False
        inv = Fraction(1) / vec[lead]
        vec = {t: c * inv for t, c in vec.items()}
        self.pivots[lead] = vec
        return True

    def contains(self, el: SuperElement) -> bool:
        vec, _ = self._reduce(el.terms)
        return vec is None

    @property
    def dim(self):
        return len(self.pivots)


def cyclic_span_dim(alg: Algebra, vector: SuperElement, ops) -> int:
    """Dimension of the span of vector under repeated application of ops
    (exact: the module is finite dimensional)."""
    span = _SparseSpan()
    span.add(vector)
    frontier = [vector]
    while frontier:
        new = []
        for v in frontier:
            for op in ops:
                w = op.apply(v)
                if w and span.add(w):
                    new.append(w)
        frontier = new
    return span.dim


# -- tensoring a degree component with the natural module -------------------------------
#
# Elements of (degree-k component) (x) V are dicts (monomial, generator slot)
# -> Fraction.  A derivation D acts by the coproduct rule
# D(u (x) v) = D(u) (x) v + (-1)^{parity(D) * parity(u)} u (x) D(v).


def _tensor_coproduct_apply(alg, op: Derivation, elem):
    gs = _layout(alg)[1]
    imgs = op.image_map()
    out = {}

    def bump(key, val):
        v = out.get(key, 0) + val
        if v:
            out[key] = v
        elif key in out:
            del out[key]

    for (mono, slot), c in elem.items():
        left = op.apply(SuperElement(alg, {mono: Fraction(1)}))
        for t, lc in left.terms.items():
            bump((t, slot), c * lc)
        img = imgs.get(slot)
        if img is not None:
            sign = -1 if (op.parity and sum(mono[gs:]) % 2) else 1
            for t, ic in img.terms.items():
                islot = next(i for i, e in enumerate(t) if e)
                bump((mono, islot), c * sign * ic)
    return out


def _tensor_left_apply(alg, op, elem):
    """op acting on the left factor only (used for the kernel constraint)."""
    out = {}
    for (mono, slot), c in elem.items():
        img = op.apply(SuperElement(alg, {mono: Fraction(1)}))
        for t, lc in img.terms.items():
            key = (t, slot)
            v = out.get(key, 0) + c * lc
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


def natural_tensor_singular_counts(alg: Algebra, k: int, bound: int = 20000):
    """Singular vectors of (ker Laplacian in degree k) (x) V, counted by
    weight.  Exact: per weight block, the stacked constraints are the
    left-factor Laplacian plus every simple raising operator acting by the
    coproduct rule."""
    dom = degree_basis(alg, k, bound)
    pairs = [(t, s) for t in dom for s in range(gen_count(alg))]
    groups = {}
    for t, s in pairs:
        w = tuple(
            a + b
            for a, b in zip(monomial_weight_doubled(alg, t), gen_weight_doubled(alg, s))
        )
        groups.setdefault(w, []).append((t, s))
    ups, _ = simple_root_operators(alg)
    lap = laplacian(alg)
    counts = {}
    for wt in sorted(groups, key=grlex_key, reverse=True):
        block = sorted(groups[wt])
        images = []
        for b in block:
            elem = {b: Fraction(1)}
            ims = [_tensor_left_apply(alg, lap, elem)]
            ims += [_tensor_coproduct_apply(alg, op, elem) for op in ups]
            images.append(ims)
        rows_keys = sorted({key for ims in images for im in ims for key in im})
        nops = 1 + len(ups)
        key_index = {}
        for op_i in range(nops):
            for key in rows_keys:
                key_index[(op_i, key)] = len(key_index)
        mat = [[Fraction(0)] * len(block) for _ in range(len(key_index))]
        for col, ims in enumerate(images):
            for op_i, im in enumerate(ims):
                for key, c in im.items():
                    mat[key_index[(op_i, key)]][col] = c
        dim = len(nullspace(mat)) if mat else len(block)
        if dim:
            counts[Weight(alg, wt)] = dim
    return counts


def kernel_tensor_natural_report(alg: Algebra, k: int, natural_multiplicity: int = 2) -> dict:
    """Character-level analysis of (ker Laplacian in degree k) (x) V with a
    claimed composition multiset {top product weight: 1, natural weight:
    natural_multiplicity, top weight of the next kernel: 1}.

    The constituent characters e_1 and e_{k+1} - e_{k-1} are grounded by the
    irreducibility certificates of the degree 1, k and k+1 kernels.  A weight
    whose claimed multiplicity exceeds its singular-vector count sits inside
    a non-split extension: character theory cannot exhibit the extension,
    only the count deficit certifies it, and the report states so.
    """
    from .jacobitrudi import ext_power_char, sym_power_char

    e = lambda r: ext_power_char(alg, r)
    for deg in (1, k, k + 1):
        rep = irreducibility_report(alg, deg)
        if rep.classification != "irreducible":
            raise ArithmeticError(f"degree-{deg} kernel is not certified irreducible")
    nxt_top = max(singular_vectors(alg, k + 1), key=lambda w: grlex_key(w.doubled))

    chi = (e(k) - e(k - 2)) * sym_power_char(alg, 1)
    counts = natural_tensor_singular_counts(alg, k)
    natural_weight = Weight.from_coeffs(alg, [1] + [0] * (alg.n - 1), [0] * alg.m)

    residual = chi - natural_multiplicity * e(1) - (e(k + 1) - e(k - 1))
    lead_exp, lead_coef = residual.leading_term()
    top_product = Weight(alg, lead_exp)
    factor_multiset = {top_product: 1, natural_weight: natural_multiplicity, nxt_top: 1}
    deficits = {
        w.format(): factor_multiset[w] - counts.get(w, 0)
        for w in factor_multiset
        if factor_multiset[w] != counts.get(w, 0)
    }
    group = weyl_group(alg)
    checks = {
        "residual_nonnegative": all(c >= 0 for c in residual.terms.values()),
        "residual_leading_multiplicity_one": lead_coef == 1,
        "residual_weyl_invariant": all(g.apply_poly(residual) == residual for g in group[: min(8, len(group))]),
        "all_singular_weights_expected": set(counts) <= set(factor_multiset),
    }
    return {
        "algebra": str(alg),
        "degree": k,
        "tensor_character_vdim": chi.evaluate_at_one(),
        "factor_multiset": {w.format(): c for w, c in factor_multiset.items()},
        "singular_counts": {w.format(): c for w, c in counts.items()},
        "extension_deficits": deficits,
        "checks": checks,
        "note": (
            "composition multiplicities are character-level bookkeeping; where the "
            "singular-vector count falls short of the multiplicity the factors form a "
            "non-split extension that character theory cannot see"
        ),
    }


@dataclass
class IrreducibilityReport:
    alg: Algebra
    degree: int
    kernel_dim: int
    singular_weights: list  # [(Weight, multiplicity)]
    has_trivial_submodule: bool
    top_cyclic_dim: int
    classification: str
    notes: list = field(default_factory=list)


def irreducibility_report(alg: Algebra, k: int, bound: int = 20000) -> IrreducibilityReport:
    """Classify ker(Laplacian) in degree k from its singular vectors plus an
    exact cyclicity check of the highest one."""
    kern = kernel_basis(alg, k, bound)
    kdim = len(kern)
    if kdim == 0:
        return IrreducibilityReport(alg, k, 0, [], False, 0, "zero", ["kernel is zero in this degree"])
    svs = singular_vectors(alg, k, bound)
    ups, downs = simple_root_operators(alg)
    weights = [(w, len(vs)) for w, vs in svs.items()]
    total_sing = sum(c for _, c in weights)

    has_trivial = False
    for w, vs in svs.items():
        if not w.is_zero():
            continue
        for v in vs:
            if all(op.apply(v).is_zero() for op in ups + downs):
                has_trivial = True

    top_weight = max(svs, key=lambda w: grlex_key(w.doubled))
    top_dim = 0
    if len(svs[top_weight]) == 1:
        top_dim = cyclic_span_dim(alg, svs[top_weight][0], downs)

    notes = []
    if total_sing == 1 and top_dim == kdim:
        cls = "irreducible"
    elif has_trivial and total_sing == 2 and len(weights) == 2:
        cls = "reducible_with_trivial_submodule"
        if top_dim == kdim:
            notes.append("indecomposable: the top singular vector is cyclic and the trivial submodule sits inside its span")
        elif top_dim == kdim - 1:
            notes.append("splits as trivial module plus the top cyclic submodule")
    else:
        cls = "inconclusive"
        notes.append("singular-vector pattern matches no implemented criterion")
    for w, vs in svs.items():
        if not is_dominant(w):
            notes.append(f"non-dominant singular weight {w.format()} (unexpected)")
    return IrreducibilityReport(alg, k, kdim, weights, has_trivial, top_dim, cls, notes)
