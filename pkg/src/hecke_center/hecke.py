"""The Iwahori-Hecke algebra of the symmetric group.

Elements are finitely supported maps from permutations (one-line tuples)
to scalars in Q(q), representing sums of the orthonormal basis T_w.  The
product is driven by the quadratic relation T_i^2 = Q T_i + 1 together
with the braid relations; general products walk one reduced word per
basis element of the shorter factor.
"""

from __future__ import annotations

import itertools
from functools import cache

from .coeff import BIG_Q, GEN_Q, LaurentPoly, RatFun, as_ratfun, qint, simplify_scalar, scalar_str
from .combi import (
    all_perms,
    apply_s_left,
    apply_s_right,
    coset_representatives,
    cycle_type,
    identity_perm,
    partial_sums,
    perm_inv,
    perm_length,
    perm_mul,
    recoils,
    reduced_word,
    ribbon_compatible,
    transposition,
    young_longest,
    young_subgroup,
    zeta_generators,
    zeta_permutation,
)
from . import symfunc


class HeckeElement:
    """Element of H_n as a sparse map permutation -> coefficient."""

    __slots__ = ("n", "support")

    def __init__(self, n, support=None):
        self.n = n
        self.support = {w: c for w, c in (support or {}).items() if c}

    @staticmethod
    def zero(n):
        return HeckeElement(n)

    @staticmethod
    def unit(n):
        return HeckeElement(n, {identity_perm(n): 1})

    @staticmethod
    def basis(w):
        return HeckeElement(len(w), {tuple(w): 1})

    def coefficient(self, w):
        return self.support.get(tuple(w), 0)

    def __bool__(self):
        return bool(self.support)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.n != other.n or self.support.keys() != other.support.keys():
            return False
        return all(_eq(self.support[w], other.support[w]) for w in self.support)

    def __add__(self, other):
        if isinstance(other, HeckeElement):
            if self.n != other.n:
                raise ValueError("mixed ranks")
            t = dict(self.support)
            for w, c in other.support.items():
                s = t.get(w, 0) + c
                if s:
                    t[w] = s
                elif w in t:
                    del t[w]
            out = HeckeElement.__new__(HeckeElement)
            out.n, out.support = self.n, t
            return out
        # scalar: add a multiple of the identity
        return self + HeckeElement(self.n, {identity_perm(self.n): other})

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.n, {w: -c for w, c in self.support.items()})

    def __sub__(self, other):
        if isinstance(other, HeckeElement):
            return self + (-other)
        return self + HeckeElement(self.n, {identity_perm(self.n): -other})

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return HeckeElement.zero(self.n)
        return HeckeElement(self.n, {w: x * c for w, x in self.support.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute; Hecke * Hecke never lands here
        return self.scale(other)

    def items(self):
        return self.support.items()

    def __repr__(self):
        if not self.support:
            return "0"
        bits = []
        for w in sorted(self.support):
            bits.append("(%s)*T%s" % (scalar_str(self.support[w]), list(w)))
        return " + ".join(bits)


def _eq(a, b):
    if type(a) is type(b):
        return a == b
    return as_ratfun(a) == as_ratfun(b)


# ---------------------------------------------------------------------------
# multiplication kernels
# ---------------------------------------------------------------------------

def _mul_gen_right(support, i, zero_hecke=False):
    """support * T_i under T_i^2 = Q T_i + 1 (or Q T_i in the 0-Hecke case)."""
    out = {}
    for w, c in support.items():
        if w[i - 1] < w[i]:
            ws = apply_s_right(w, i)
            s = out.get(ws, 0) + c
            if s:
                out[ws] = s
            elif ws in out:
                del out[ws]
        else:
            cq = c * BIG_Q
            s = out.get(w, 0) + cq
            if s:
                out[w] = s
            elif w in out:
                del out[w]
            if not zero_hecke:
                ws = apply_s_right(w, i)
                s = out.get(ws, 0) + c
                if s:
                    out[ws] = s
                elif ws in out:
                    del out[ws]
    return out


def _mul_gen_left(i, support, zero_hecke=False):
    """T_i * support; ascent test uses positions of the values i, i+1."""
    out = {}
    for w, c in support.items():
        pos_i = w.index(i)
        pos_i1 = w.index(i + 1)
        ws = apply_s_left(w, i)
        if pos_i < pos_i1:
            s = out.get(ws, 0) + c
            if s:
                out[ws] = s
            elif ws in out:
                del out[ws]
        else:
            cq = c * BIG_Q
            s = out.get(w, 0) + cq
            if s:
                out[w] = s
            elif w in out:
                del out[w]
            if not zero_hecke:
                s = out.get(ws, 0) + c
                if s:
                    out[ws] = s
                elif ws in out:
                    del out[ws]
    return out


def _mul_basis_right(support, v, zero_hecke=False):
    """support * T_v via a reduced word of v."""
    for i in reduced_word(v):
        support = _mul_gen_right(support, i, zero_hecke)
    return support


def _mul_basis_left(u, support, zero_hecke=False):
    """T_u * support; the word is applied right to left."""
    for i in reversed(reduced_word(u)):
        support = _mul_gen_left(i, support, zero_hecke)
    return support


def multiply(a, b):
    """Bilinear product in H_n, expanding the cheaper side basiswise."""
    if a.n != b.n:
        raise ValueError("mixed ranks")
    n = a.n
    if not a.support or not b.support:
        return HeckeElement.zero(n)
    cost_right = len(a.support) * sum(len(reduced_word(v)) for v in b.support)
    cost_left = len(b.support) * sum(len(reduced_word(u)) for u in a.support)
    acc = {}
    if cost_right <= cost_left:
        for v in sorted(b.support):
            cv = b.support[v]
            part = _mul_basis_right(a.support, v)
            for w, c in part.items():
                s = acc.get(w, 0) + c * cv
                if s:
                    acc[w] = s
                elif w in acc:
                    del acc[w]
    else:
        for u in sorted(a.support):
            cu = a.support[u]
            part = _mul_basis_left(u, b.support)
            for w, c in part.items():
                s = acc.get(w, 0) + c * cu
                if s:
                    acc[w] = s
                elif w in acc:
                    del acc[w]
    out = HeckeElement.__new__(HeckeElement)
    out.n, out.support = n, acc
    return out


def gen_t(n, i):
    """The generator T_i in H_n."""
    if not 1 <= i <= n - 1:
        raise ValueError("generator index out of range")
    return HeckeElement.basis(apply_s_right(identity_perm(n), i))


def scalar_product(a, b):
    """Orthonormal pairing (T_w, T_v) = delta: sum of products of
    matching coefficients."""
    if a.n != b.n:
        raise ValueError("mixed ranks")
    small, big = (a.support, b.support) if len(a.support) <= len(b.support) else (b.support, a.support)
    total = 0
    for w, c in small.items():
        d = big.get(w)
        if d is not None:
            total = total + c * d
    return total


def direct_product(factors):
    """Outer product of Hecke elements along consecutive blocks."""
    n = sum(f.n for f in factors)
    support = {(): 1}
    offset = 0
    for f in factors:
        new = {}
        for w0, c0 in support.items():
            for w1, c1 in f.support.items():
                new[w0 + tuple(x + offset for x in w1)] = c0 * c1
        support = new
        offset += f.n
    return HeckeElement(n, support)


def is_central(h):
    """True when h commutes with every generator."""
    for i in range(1, h.n):
        t = gen_t(h.n, i)
        if multiply(h, t) != multiply(t, h):
            return False
    return True


# ---------------------------------------------------------------------------
# special elements
# ---------------------------------------------------------------------------

def zeta(J):
    """T at the canonical minimal-length class representative w_J."""
    return HeckeElement.basis(zeta_permutation(tuple(J)))


def jm_element(kind, i, n):
    """Jucys-Murphy elements: multiplicative xi_i or additive x_i."""
    if not 1 <= i <= n:
        raise ValueError("index out of range")
    if kind == "xi":
        out = HeckeElement.unit(n)
        word = list(range(i - 1, 0, -1)) + list(range(1, i))
        for j in word:
            out = multiply(out, gen_t(n, j))
        return out
    if kind == "x":
        return HeckeElement(n, {transposition(n, k, i): 1 for k in range(1, i)})
    raise ValueError("kind must be xi or x")


def sqrt_xi_word(uu, I):
    """Generator word of the square root of a standard JM monomial."""
    word = []
    offset = 0
    for u, p in zip(uu, I):
        if len(u) != p:
            raise ValueError("blocks of uu do not match I")
        if any(b not in (0, 1) for b in u):
            raise ValueError("uu must be boolean")
        for pos in range(1, p):
            if u[pos]:
                word.extend(range(offset + pos, offset, -1))
        offset += p
    return tuple(word)


def xi_monomial(uu, I):
    """Standard JM monomial xi^uu with its square-root permutation.

    The leading bit of each block is ignored (xi_1 = 1).  Returns a dict
    with the element and the permutation sigma with xi^uu = T_s T_(s^-1).
    """
    I = tuple(I)
    uu = tuple(tuple(u) for u in uu)
    n = sum(I)
    word = sqrt_xi_word(uu, I)
    sigma = identity_perm(n)
    for i in word:
        sigma = apply_s_right(sigma, i)
    assert len(reduced_word(sigma)) == len(word)
    element = _mul_basis_right(dict(HeckeElement.basis(sigma).support), perm_inv(sigma))
    return {"element": HeckeElement(n, element), "sigma": sigma}


def normalize(I, h):
    """Normalization morphism: sum of T_w h T_(w^-1) over minimal-length
    representatives of the cosets w S_I; central input gives central output."""
    I = tuple(I)
    n = h.n
    if sum(I) != n:
        raise ValueError("composition does not sum to n")
    allowed = set(young_subgroup(n, I))
    if not set(h.support) <= allowed:
        raise ValueError("support not contained in the Young subgroup")
    acc = {}
    for w in coset_representatives(n, I, "min", "right"):
        # T_w T_u is a single basis element for u in S_I (lengths add)
        shifted = {perm_mul(w, u): c for u, c in h.support.items()}
        part = _mul_basis_right(shifted, perm_inv(w))
        for v, c in part.items():
            s = acc.get(v, 0) + c
            if s:
                acc[v] = s
            elif v in acc:
                del acc[v]
    return HeckeElement(n, acc)


def subgroup_conjugation_sum(K, h):
    """Sum of T_u h T_(u^-1) over every element of the Young subgroup S_K."""
    n = h.n
    if sum(K) != n:
        raise ValueError("composition does not sum to n")
    acc = HeckeElement.zero(n)
    for u in young_subgroup(n, tuple(K)):
        acc = acc + multiply(multiply(HeckeElement.basis(u), h), HeckeElement.basis(perm_inv(u)))
    return acc


def yang_baxter(v, w):
    """Yang-Baxter element for spectral vector v along any reduced word of w."""
    v = tuple(v)
    w = tuple(w)
    n = len(w)
    if len(v) != n:
        raise ValueError("spectral vector has wrong length")
    if len(set(v)) != n:
        raise ValueError("repeated spectral values")
    out = HeckeElement.unit(n)
    cur = identity_perm(n)
    for i in reduced_word(w):
        k = v[cur[i] - 1] - v[cur[i - 1] - 1]
        if k == 0:
            raise ValueError("vanishing spectral difference")
        spectral = RatFun(LaurentPoly({k: 1}), qint(k))
        out = multiply(out, gen_t(n, i) - HeckeElement.unit(n).scale(spectral))
        cur = apply_s_right(cur, i)
    return out


def yang_baxter_dual_check(v, n):
    """Verify the duality (Y_w^v, T_omega Y_(omega w')^u) = delta with u
    the reversal of v."""
    v = tuple(v)
    u = tuple(reversed(v))
    omega = tuple(range(n, 0, -1))
    t_omega = HeckeElement.basis(omega)
    ys = {w: yang_baxter(v, w) for w in all_perms(n)}
    yhats = {w: multiply(t_omega, yang_baxter(u, perm_mul(omega, w))) for w in all_perms(n)}
    for w in all_perms(n):
        for wp in all_perms(n):
            val = scalar_product(ys[w], yhats[wp])
            if not _eq(val, 1 if w == wp else 0):
                return False
    return True


def signed_sum(I, kind):
    """Box (q^l(w)) or nabla ((-q)^(-l(w))) weighted sums over S_I."""
    I = tuple(I)
    n = sum(I)
    support = {}
    for w in young_subgroup(n, I):
        l = perm_length(w)
        if kind == "box":
            support[w] = GEN_Q ** l
        elif kind == "nabla":
            support[w] = simplify_scalar(as_ratfun((-1) ** l) / GEN_Q ** l)
        else:
            raise ValueError("kind must be box or nabla")
    return HeckeElement(n, support)


def upsilon(J):
    """Product over parts k of (T_(k-1)-q)(T_(k-2)-q^2/[2])...(-1/[k]),
    assembled as a direct product along the composition."""
    factors = []
    for k in J:
        f = HeckeElement.unit(k)
        for j in range(1, k):
            term = gen_t(k, k - j) - HeckeElement.unit(k).scale(RatFun(GEN_Q ** j, qint(j)))
            f = multiply(f, term)
        f = f.scale(RatFun(-1, qint(k)))
        factors.append(f)
    return direct_product(factors)


class ZHeckeElement:
    """Hecke element with polynomial coefficients in variables z_1..z_r,
    stored as a map from z-exponent vectors to Hecke elements."""

    __slots__ = ("n", "r", "terms")

    def __init__(self, n, r, terms=None):
        self.n = n
        self.r = r
        self.terms = {z: h for z, h in (terms or {}).items() if h}

    def coefficient(self, zvec):
        return self.terms.get(tuple(zvec), HeckeElement.zero(self.n))

    def __eq__(self, other):
        if not isinstance(other, ZHeckeElement):
            return NotImplemented
        return (self.n, self.r) == (other.n, other.r) and self.terms == other.terms

    def scalar_with(self, h):
        """Pairing against a plain element, one scalar per z-monomial."""
        out = {}
        for z, elt in self.terms.items():
            val = scalar_product(elt, h)
            if not _eq(val, 0):
                out[z] = val
        return out

    def map_elements(self, f):
        return ZHeckeElement(self.n, self.r, {z: f(h) for z, h in self.terms.items()})


def _e_factor(p, offset, n, kind):
    """E_p(z) or E^xi_p(z) for one block of size p at a position offset,
    as a map z-degree -> HeckeElement of H_n."""
    terms = {0: HeckeElement.unit(n)}
    for j in range(1, p):
        if kind == "T":
            chain = HeckeElement.unit(n)
            for i in range(offset + j, offset, -1):
                chain = multiply(chain, gen_t(n, i))
        elif kind == "xi":
            chain = HeckeElement.unit(n)
            word = list(range(offset + j, offset, -1)) + list(range(offset + 1, offset + j + 1))
            for i in word:
                chain = multiply(chain, gen_t(n, i))
        else:
            raise ValueError("kind must be T or xi")
        new = {}
        for d, h in terms.items():
            new[d] = new.get(d, HeckeElement.zero(n)) + h
        for d, h in terms.items():
            hd = multiply(h, chain)
            new[d + 1] = new.get(d + 1, HeckeElement.zero(n)) + hd
        terms = new
    return terms


def e_generating_product(J, kind="T"):
    """The generating products E_J(z_1..z_r) or E^xi_J(z_1..z_r); the
    z-exponent in variable i stays below the i-th part."""
    J = tuple(J)
    n = sum(J)
    r = len(J)
    terms = {(): HeckeElement.unit(n)}
    offset = 0
    for idx, p in enumerate(J):
        factor = _e_factor(p, offset, n, kind)
        new = {}
        for z, h in terms.items():
            for d, g in factor.items():
                key = z + (d,)
                prod = multiply(h, g)
                if prod:
                    new[key] = new.get(key, HeckeElement.zero(n)) + prod
        terms = new
        offset += p
    return ZHeckeElement(n, r, terms)


def descent_l(J):
    """L[J]: sum of T_w over w of maximal length in the cosets S_J w,
    equivalently over w whose recoils contain the generator set of zeta_J."""
    J = tuple(J)
    n = sum(J)
    req = zeta_generators(J)
    return HeckeElement(n, {w: 1 for w in all_perms(n) if req <= recoils(w)})


def ribbon_r(theta, n):
    """Ribbon function R[theta]: sum of T_w over compatible fillings."""
    return HeckeElement(n, {w: 1 for w in ribbon_compatible(tuple(tuple(c) for c in theta), n)})


def jm_elementary(n, k):
    """Elementary symmetric polynomial e_k in the additive JM elements
    x_2..x_n, expanded by brute-force products."""
    if not 0 <= k <= n - 1:
        raise ValueError("degree out of range")
    xs = [jm_element("x", i, n) for i in range(2, n + 1)]
    acc = HeckeElement.zero(n)
    for combo in itertools.combinations(xs, k):
        term = HeckeElement.unit(n)
        for f in combo:
            term = multiply(term, f)
        acc = acc + term
    return acc


def frobenius_phi(h):
    """The morphism sending T_w to the modified complete function of the
    cycle type of w, extended linearly; lands in the p basis."""
    n = h.n
    out = symfunc.SymmetricFunction.zero("p", n)
    for w in sorted(h.support):
        out = out + symfunc.ram_modified_p(cycle_type(w)).scale(h.support[w])
    return out.map_coeffs(simplify_scalar)


def regular_trace(h):
    """Trace of right multiplication by h on H_n in the T basis."""
    total = 0
    for w in all_perms(h.n):
        part = _mul_basis_left(w, dict(h.support))
        c = part.get(w)
        if c:
            total = total + c
    return simplify_scalar(total) if total else 0


def zeta_multiplication_diagonal(J, zero_hecke=False):
    """Diagonal of left multiplication by zeta_J in the T basis, in the
    generic or the 0-Hecke algebra (T_i^2 = Q T_i)."""
    J = tuple(J)
    n = sum(J)
    wj = zeta_permutation(J)
    out = {}
    for w in all_perms(n):
        part = _mul_basis_left(wj, {w: 1}, zero_hecke)
        out[w] = part.get(w, 0)
    return out
