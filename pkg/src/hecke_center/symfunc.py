"""Symmetric functions of fixed degree over Q(q).

The five classical bases e, h, p, m, s are supported, with the monomial
basis as the computational pivot: products are multiset convolutions of
exponent vectors, Schur expansions come from Kostka matrices computed by
semistandard tableau counting, and every transition matrix A2B is derived
from expansions into m plus one exact inverse.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache

from .coeff import as_ratfun, qint, simplify_scalar, scalar_str, scalar_str_pretty, BIG_Q, RatFun, L_ONE
from .combi import (
    compositions,
    conjugate,
    partitions,
    sort_to_partition,
    z_lambda,
)

BASES = ("e", "h", "p", "m", "s")


# ---------------------------------------------------------------------------
# monomial kernel
# ---------------------------------------------------------------------------

def _distinct_permutations(items):
    """Distinct permutations of a multiset (tuple of ints)."""
    items = sorted(items, reverse=True)
    n = len(items)
    out = []
    def gen(remaining, prefix):
        if not remaining:
            out.append(tuple(prefix))
            return
        seen = set()
        for i, x in enumerate(remaining):
            if x in seen:
                continue
            seen.add(x)
            gen(remaining[:i] + remaining[i + 1:], prefix + [x])
    gen(items, [])
    return out


@cache
def _mono_product(la, mu):
    """m_la * m_mu in the m basis: tuple of (nu, integer coefficient)."""
    if not la:
        return ((mu, 1),)
    if not mu:
        return ((la, 1),)
    n = sum(la) + sum(mu)
    out = []
    for nu in partitions(n):
        L = len(nu)
        if L > len(la) + len(mu) or L < max(len(la), len(mu)):
            continue
        if nu[0] > la[0] + mu[0]:
            continue
        count = 0
        padded = la + (0,) * (L - len(la))
        if len(padded) > L:
            continue
        for a in _distinct_permutations(padded):
            rest = []
            ok = True
            for x, y in zip(nu, a):
                d = x - y
                if d < 0:
                    ok = False
                    break
                if d:
                    rest.append(d)
            if ok and tuple(sorted(rest, reverse=True)) == mu:
                count += 1
        if count:
            out.append((nu, count))
    return tuple(out)


class SymmetricFunction:
    """Homogeneous symmetric function stored in one declared basis."""

    __slots__ = ("basis", "n", "coeffs")

    def __init__(self, basis, n, coeffs):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        self.basis = basis
        self.n = n
        self.coeffs = {la: c for la, c in coeffs.items() if c}

    @staticmethod
    def zero(basis, n):
        return SymmetricFunction(basis, n, {})

    def coefficient(self, la):
        return self.coeffs.get(tuple(la), 0)

    def map_coeffs(self, f):
        return SymmetricFunction(self.basis, self.n,
                                 {la: f(c) for la, c in self.coeffs.items()})

    def __add__(self, other):
        if self.basis != other.basis or self.n != other.n:
            raise ValueError("basis/degree mismatch")
        t = dict(self.coeffs)
        for la, c in other.coeffs.items():
            s = t.get(la, 0) + c
            if s:
                t[la] = s
            elif la in t:
                del t[la]
        return SymmetricFunction(self.basis, self.n, t)

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return SymmetricFunction.zero(self.basis, self.n)
        return self.map_coeffs(lambda x: x * c)

    def __eq__(self, other):
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        if self.n != other.n:
            return False
        a = self if self.basis == "m" else self.to_basis("m")
        b = other if other.basis == "m" else other.to_basis("m")
        if a.coeffs.keys() != b.coeffs.keys():
            return False
        return all(a.coeffs[k] == b.coeffs[k] for k in a.coeffs)

    def to_basis(self, dst):
        if dst == self.basis:
            return self
        mat = transition_matrix(self.n, self.basis, dst)
        out = {}
        for la, c in self.coeffs.items():
            i = mat.rows.index(la)
            for j, mu in enumerate(mat.cols):
                v = mat.entries[i][j]
                if v:
                    s = out.get(mu, 0) + c * v
                    if s:
                        out[mu] = s
                    elif mu in out:
                        del out[mu]
        return SymmetricFunction(dst, self.n, out)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for la in sorted(self.coeffs, key=lambda t: partitions(self.n).index(t)):
            bits.append("(%s)*%s_%s" % (scalar_str(self.coeffs[la]), self.basis,
                                        "".join(map(str, la)) or "0"))
        return " + ".join(bits)


def multiply(f, g):
    """Product of symmetric functions, computed through the m basis."""
    a = f.to_basis("m")
    b = g.to_basis("m")
    out = {}
    for la, c1 in a.coeffs.items():
        for mu, c2 in b.coeffs.items():
            c = c1 * c2
            for nu, k in _mono_product(la, mu):
                s = out.get(nu, 0) + c * k
                if s:
                    out[nu] = s
                elif nu in out:
                    del out[nu]
    return SymmetricFunction("m", a.n + b.n, out)


# generators expanded in the m basis ----------------------------------------

@cache
def _gen_in_m(basis, k):
    if k == 0:
        return SymmetricFunction("m", 0, {(): 1})
    if basis == "e":
        return SymmetricFunction("m", k, {(1,) * k: 1})
    if basis == "h":
        return SymmetricFunction("m", k, {la: 1 for la in partitions(k)})
    if basis == "p":
        return SymmetricFunction("m", k, {(k,): 1})
    raise ValueError(basis)


@cache
def _multiplicative_in_m(basis, la):
    out = SymmetricFunction("m", 0, {(): 1})
    for part in la:
        out = multiply(out, _gen_in_m(basis, part))
    return out


@cache
def _kostka(la, mu):
    """Number of semistandard tableaux of shape la and content mu."""
    la, mu = tuple(la), tuple(mu)
    if sum(la) != sum(mu):
        return 0

    def count(shape, letters):
        # place letters one value at a time as horizontal strips
        if not letters:
            return 1 if tuple(shape) == la else 0
        total = 0
        k = letters[0]
        rows = len(la)
        shape_before = list(shape)

        def strips(i, left, current):
            nonlocal total
            if left == 0:
                total += count(tuple(current), letters[1:])
                return
            if i < 0:
                return
            # new cells in row i may not sit under cells added this round
            hi = la[i] if i == 0 else min(la[i], shape_before[i - 1])
            for add in range(0, hi - current[i] + 1):
                if add > left:
                    break
                current[i] += add
                strips(i - 1, left - add, current)
                current[i] -= add

        strips(rows - 1, k, list(shape))
        return total

    return count((0,) * len(la), mu)


@cache
def _schur_in_m(la):
    n = sum(la)
    return SymmetricFunction("m", n, {mu: k for mu in partitions(n)
                                      if (k := _kostka(la, mu))})


# ---------------------------------------------------------------------------
# labelled matrices over Q(q)
# ---------------------------------------------------------------------------

class QMatrix:
    """Dense matrix over Q(q) with partition row/column labels."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        self.rows = tuple(tuple(r) for r in rows)
        self.cols = tuple(tuple(c) for c in cols)
        self.entries = [list(row) for row in entries]
        if len(self.entries) != len(self.rows) or any(
                len(r) != len(self.cols) for r in self.entries):
            raise ValueError("entry grid does not match labels")

    @staticmethod
    def identity(labels):
        labels = tuple(labels)
        return QMatrix(labels, labels,
                       [[1 if i == j else 0 for j in range(len(labels))]
                        for i in range(len(labels))])

    @staticmethod
    def diagonal(labels, diag):
        labels = tuple(labels)
        return QMatrix(labels, labels,
                       [[diag[i] if i == j else 0 for j in range(len(labels))]
                        for i in range(len(labels))])

    def entry(self, la, mu):
        return self.entries[self.rows.index(tuple(la))][self.cols.index(tuple(mu))]

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        for r1, r2 in zip(self.entries, other.entries):
            for a, b in zip(r1, r2):
                if not _scalar_eq(a, b):
                    return False
        return True

    def __mul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise ValueError("label mismatch in matrix product")
            m, k, n = len(self.rows), len(self.cols), len(other.cols)
            out = [[0] * n for _ in range(m)]
            for i in range(m):
                row = self.entries[i]
                for t in range(k):
                    a = row[t]
                    if not a:
                        continue
                    orow = other.entries[t]
                    for j in range(n):
                        b = orow[j]
                        if b:
                            out[i][j] = out[i][j] + a * b
            return QMatrix(self.rows, other.cols, out)
        return QMatrix(self.rows, self.cols,
                       [[c * other for c in row] for row in self.entries])

    def transpose(self):
        m, n = len(self.rows), len(self.cols)
        return QMatrix(self.cols, self.rows,
                       [[self.entries[i][j] for i in range(m)] for j in range(n)])

    def inverse(self):
        """Exact inverse by Gauss-Jordan elimination over Q(q)."""
        n = len(self.rows)
        if len(self.rows) != len(self.cols):
            raise ValueError("not square")
        a = [[as_ratfun(x) for x in row] for row in self.entries]
        b = [[as_ratfun(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise ValueError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            inv = as_ratfun(1) / a[col][col]
            a[col] = [x * inv for x in a[col]]
            b[col] = [x * inv for x in b[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return QMatrix(self.cols, self.rows,
                       [[simplify_scalar(x) for x in row] for row in b])

    def map(self, f):
        return QMatrix(self.rows, self.cols,
                       [[f(x) for x in row] for row in self.entries])

    def simplified(self):
        return self.map(simplify_scalar)

    def is_identity(self):
        return self == QMatrix.identity(self.rows)

    def is_q_free(self):
        """True when every entry is a rational constant."""
        for row in self.entries:
            for x in row:
                x = simplify_scalar(x)
                if not isinstance(x, (int, Fraction)):
                    return False
        return True

    def strings(self, pretty=False):
        fmt = scalar_str_pretty if pretty else scalar_str
        return [[fmt(x) for x in row] for row in self.entries]

    def __repr__(self):
        body = "\n".join("  ".join(r) for r in self.strings())
        return "QMatrix(%s x %s)\n%s" % (len(self.rows), len(self.cols), body)


def _scalar_eq(a, b):
    if type(a) is type(b):
        return a == b
    return as_ratfun(a) == as_ratfun(b)


# ---------------------------------------------------------------------------
# transition matrices
# ---------------------------------------------------------------------------

@cache
def _basis_in_m_matrix(n, basis):
    labels = partitions(n)
    rows = []
    for la in labels:
        if basis == "m":
            f = SymmetricFunction("m", n, {la: 1})
        elif basis == "s":
            f = _schur_in_m(la)
        else:
            f = _multiplicative_in_m(basis, la)
        rows.append([f.coefficient(mu) for mu in labels])
    return QMatrix(labels, labels, rows)


@cache
def transition_matrix(n, src, dst):
    """Matrix expanding the src basis into the dst basis: row la of A2B
    holds the dst-coefficients of a_la, so (A2B)(B2C) = A2C exactly."""
    if src not in BASES or dst not in BASES:
        raise ValueError("unknown basis")
    if src == dst:
        return QMatrix.identity(partitions(n))
    if dst == "m":
        return _basis_in_m_matrix(n, src)
    if src == "m":
        return _basis_in_m_matrix(n, dst).inverse().simplified()
    out = transition_matrix(n, src, "m") * transition_matrix(n, "m", dst)
    return out.simplified()


def count_matrices_oracle(kind, I, J):
    """Brute-force count of integer matrices with row sums I and column
    sums J: arbitrary nonnegative, 0-1, or one nonzero entry per row."""
    I, J = tuple(I), tuple(J)
    if sum(I) != sum(J):
        raise ValueError("unequal weights")

    def rows(rem_cols, r):
        if r == len(I):
            return 1 if all(c == 0 for c in rem_cols) else 0
        total = 0
        target = I[r]
        cols = len(rem_cols)

        def fill(j, left, current):
            nonlocal total
            if left == 0:
                total += rows(tuple(a - b for a, b in zip(rem_cols, current)), r + 1)
                return
            if j == cols:
                return
            if kind == "one-per-row":
                if left == target:
                    for jj in range(cols):
                        if rem_cols[jj] >= target:
                            cur = [0] * cols
                            cur[jj] = target
                            total += rows(tuple(a - b for a, b in zip(rem_cols, cur)), r + 1)
                return
            hi = min(left, rem_cols[j], 1 if kind == "zero-one" else left)
            for v in range(hi + 1):
                current[j] = v
                fill(j + 1, left - v, current)
                current[j] = 0

        fill(0, target, [0] * cols)
        return total

    return rows(J, 0)


# ---------------------------------------------------------------------------
# the modified complete functions and hook generating products
# ---------------------------------------------------------------------------

@cache
def ram_modified_p(J):
    """Product of modified complete functions for J, in the p basis.

    A single factor of degree k is (1/Q) * sum over la |- k of
    z_la^{-1} (-1)^{l(la)} Q^{l(la)} (prod [la_i]) p_la.
    """
    J = tuple(J)
    out = {(): as_ratfun(1)}
    for k in J:
        factor = {}
        for la in partitions(k):
            c = as_ratfun(Fraction((-1) ** len(la), z_lambda(la)))
            c = c * (BIG_Q ** (len(la) - 1))
            for part in la:
                c = c * qint(part)
            factor[la] = c
        new = {}
        for mu, c1 in out.items():
            for la, c2 in factor.items():
                nu = sort_to_partition(mu + la)
                s = new.get(nu, as_ratfun(0)) + c1 * c2
                new[nu] = s
        out = {nu: c for nu, c in new.items() if c}
    return SymmetricFunction("p", sum(J), out)


def ram_modified(J):
    """The product of modified complete functions, expanded in Schur basis."""
    return ram_modified_p(J).to_basis("s").map_coeffs(simplify_scalar)


def hook_partition(k, size):
    """Hook partition with arm k: (k, 1^(size-k))."""
    return (k,) + (1,) * (size - k)


@cache
def hook_generating_product(J):
    """z-coefficients of the product of hook-Schur generating polynomials.

    Factor for a part j is  s_{1^j} + z s_{2,1^(j-2)} + ... + z^(j-1) s_j;
    returns a map from z-exponent vectors to degree-n functions in m."""
    J = tuple(J)
    out = {(): SymmetricFunction("m", 0, {(): 1})}
    for j in J:
        new = {}
        for a in range(j):
            hook = _schur_in_m(hook_partition(a + 1, j))
            for zvec, f in out.items():
                key = zvec + (a,)
                new[key] = multiply(f, hook)
        out = new
    return out


def omega_involution(f):
    """The involution exchanging e and h (conjugates Schur indices)."""
    if f.basis == "e":
        return SymmetricFunction("h", f.n, dict(f.coeffs))
    if f.basis == "h":
        return SymmetricFunction("e", f.n, dict(f.coeffs))
    s = f.to_basis("s")
    return SymmetricFunction("s", f.n, {conjugate(la): c for la, c in s.coeffs.items()})
