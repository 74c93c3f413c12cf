"""Partitions, compositions, permutations, tableaux and ribbons (type A).

Permutations are tuples in one-line notation on {1..n}; partitions and
compositions are tuples of positive integers.  Matrix-indexing order for
partitions is decreasing lexicographic everywhere: 5, 41, 32, 311, 221,
2111, 11111.
"""

from __future__ import annotations

import itertools
from functools import cache, lru_cache


# ---------------------------------------------------------------------------
# partitions and compositions
# ---------------------------------------------------------------------------

@cache
def partitions(n, max_part=None):
    """All partitions of n in decreasing lexicographic order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@cache
def compositions(n):
    """All compositions of n, ordered by length then decreasing lex."""
    out = []
    def gen(rem, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for part in range(rem, 0, -1):
            gen(rem - part, prefix + [part])
    gen(n, [])
    out.sort(key=lambda c: (len(c), tuple(-p for p in c)))
    return tuple(out)


def partition_index(la):
    """Position of a partition in the fixed matrix order."""
    return partitions(sum(la)).index(tuple(la))


def sort_to_partition(I):
    return tuple(sorted(I, reverse=True))


def is_partition(la):
    return all(a >= b for a, b in zip(la, la[1:])) and all(p > 0 for p in la)


def conjugate(la):
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > i) for i in range(la[0]))


def hooks(la):
    """Multiset (sorted tuple) of hook lengths of the diagram of la."""
    conj = conjugate(la)
    out = [la[i] - j + conj[j] - i - 1 for i in range(len(la)) for j in range(la[i])]
    return tuple(sorted(out))


def contents(la):
    """Multiset (sorted tuple) of contents column - row."""
    out = [j - i for i in range(len(la)) for j in range(la[i])]
    return tuple(sorted(out))


def z_lambda(la):
    """Centraliser order: product over part sizes i of i^mult * mult!."""
    z = 1
    for i in set(la):
        m = la.count(i)
        z *= i ** m * _factorial(m)
    return z


def natural(I):
    """I-natural: decrement every part by one and drop zeros."""
    return tuple(p - 1 for p in I if p > 1)


def partition_stats(la):
    """Conjugate, hooks, contents, centraliser order and la-natural."""
    la = tuple(la)
    return {
        "conjugate": conjugate(la),
        "hooks": hooks(la),
        "contents": contents(la),
        "z": z_lambda(la),
        "natural": natural(la),
    }


@cache
def _factorial(m):
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def partial_sums(I):
    out = []
    s = 0
    for p in I:
        s += p
        out.append(s)
    return tuple(out)


def zeta_generators(I):
    """Indices i with T_i appearing in the canonical word of zeta_I:
    the complement of the partial sums of I in {1..n-1}."""
    n = sum(I)
    cuts = set(partial_sums(I))
    return frozenset(i for i in range(1, n) if i not in cuts)


@cache
def compositions_finer(J):
    """All compositions refining J (each part replaced by a composition)."""
    parts = [compositions(p) for p in J]
    out = []
    for combo in itertools.product(*parts):
        out.append(tuple(itertools.chain.from_iterable(combo)))
    return tuple(out)


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

def identity_perm(n):
    return tuple(range(1, n + 1))


@cache
def all_perms(n):
    """S_n in lexicographic order."""
    return tuple(itertools.permutations(range(1, n + 1)))


def perm_mul(u, v):
    """(u*v)(i) = u(v(i))."""
    return tuple(u[x - 1] for x in v)


def perm_inv(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def perm_length(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def apply_s_right(w, i):
    """w * s_i: swap positions i, i+1 (1-based)."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def apply_s_left(w, i):
    """s_i * w: swap values i, i+1."""
    out = list(w)
    a, b = out.index(i), out.index(i + 1)
    out[a], out[b] = out[b], out[a]
    return tuple(out)


_REDUCED_WORDS = {}

def reduced_word(w):
    """A canonical reduced word (leftmost-descent scan), cached."""
    word = _REDUCED_WORDS.get(w)
    if word is not None:
        return word
    rev = []
    v = list(w)
    n = len(v)
    while True:
        for i in range(n - 1):
            if v[i] > v[i + 1]:
                rev.append(i + 1)
                v[i], v[i + 1] = v[i + 1], v[i]
                break
        else:
            break
    word = tuple(reversed(rev))
    _REDUCED_WORDS[w] = word
    return word


def descents(w):
    """Right descents: positions i with w(i) > w(i+1)."""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def recoils(w):
    """Values i such that i+1 sits to the left of i in the word."""
    pos = {x: i for i, x in enumerate(w)}
    return frozenset(i for i in range(1, len(w)) if pos[i + 1] < pos[i])


def cycle_type(w):
    n = len(w)
    seen = [False] * n
    lens = []
    for s in range(n):
        if seen[s]:
            continue
        c = 0
        j = s
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            c += 1
        lens.append(c)
    return tuple(sorted(lens, reverse=True))


def transposition(n, i, j):
    out = list(range(1, n + 1))
    out[i - 1], out[j - 1] = j, i
    return tuple(out)


def longest_element(n):
    return tuple(range(n, 0, -1))


def zeta_permutation(I):
    """w_I: on each block of I the cycle sending the block top-first."""
    word = []
    start = 1
    for p in I:
        end = start + p - 1
        word.append(end)
        word.extend(range(start, end))
        start = end + 1
    return tuple(word)


def young_longest(I):
    """Longest element of the Young subgroup S_I."""
    word = []
    start = 1
    for p in I:
        word.extend(range(start + p - 1, start - 1, -1))
        start += p
    return tuple(word)


@cache
def young_subgroup(n, I):
    """All elements of the Young subgroup S_I embedded in S_n."""
    if sum(I) != n:
        raise ValueError("composition does not sum to n")
    blocks = []
    start = 1
    for p in I:
        blocks.append(list(itertools.permutations(range(start, start + p))))
        start += p
    return tuple(tuple(itertools.chain.from_iterable(c))
                 for c in itertools.product(*blocks))


def _blocks(I):
    out = []
    s = 0
    for p in I:
        out.append((s, s + p))
        s += p
    return out


@lru_cache(maxsize=None)
def coset_representatives(n, I, mode="min", side="right"):
    """Distinguished coset representatives for the Young subgroup S_I.

    side="right" means cosets w*S_I (representatives sorted within each
    position block); side="left" means cosets S_I*w.  mode picks the
    minimal- or maximal-length element of each coset.
    """
    if sum(I) != n:
        raise ValueError("composition does not sum to n")
    blocks = _blocks(I)
    out = []
    if side == "right":
        increasing = mode == "min"
        for w in all_perms(n):
            ok = True
            for a, b in blocks:
                seg = w[a:b]
                if increasing:
                    ok = all(seg[i] < seg[i + 1] for i in range(len(seg) - 1))
                else:
                    ok = all(seg[i] > seg[i + 1] for i in range(len(seg) - 1))
                if not ok:
                    break
            if ok:
                out.append(w)
    elif side == "left":
        inner = coset_representatives(n, I, mode, "right")
        out = sorted(perm_inv(w) for w in inner)
    else:
        raise ValueError("side must be left or right")
    return tuple(out)


def project(w, I):
    """Cut w into blocks of sizes I and renormalise values inside each
    block to its own range; the result lies in the Young subgroup S_I."""
    out = []
    s = 0
    for p in I:
        seg = w[s:s + p]
        ranks = sorted(seg)
        out.extend(s + 1 + ranks.index(x) for x in seg)
        s += p
    return tuple(out)


def young_embed(blocks, I):
    """Direct product of small permutations into S_n along composition I."""
    out = []
    offset = 0
    for blk, p in zip(blocks, I):
        if len(blk) != p:
            raise ValueError("block sizes do not match composition")
        out.extend(x + offset for x in blk)
        offset += p
    return tuple(out)


@cache
def min_length_by_class(n):
    """Minimal Coxeter length attained in each conjugacy class."""
    best = {}
    for w in all_perms(n):
        t = cycle_type(w)
        l = perm_length(w)
        if t not in best or l < best[t]:
            best[t] = l
    return best


# ---------------------------------------------------------------------------
# standard tableaux
# ---------------------------------------------------------------------------

@cache
def standard_tableaux(la):
    """All standard Young tableaux of shape la, as tuples of row tuples."""
    la = tuple(la)
    n = sum(la)
    if n == 0:
        return ((),)
    out = []
    # remove n from each outer corner and extend recursively
    for i, p in enumerate(la):
        if p and (i == len(la) - 1 or la[i + 1] < p):
            sub = la[:i] + ((p - 1,) if p > 1 else ()) + la[i + 1:]
            if p == 1:
                sub = la[:i] + la[i + 1:]
            for t in standard_tableaux(sub):
                rows = [list(r) for r in t]
                while len(rows) <= i:
                    rows.append([])
                rows[i].append(n)
                out.append(tuple(tuple(r) for r in rows))
    return tuple(sorted(out))


def tableau_positions(t):
    """Map entry -> (row, col), 0-based."""
    pos = {}
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            pos[x] = (i, j)
    return pos


def tableau_content(t, k):
    """Content (col - row) of the cell holding k."""
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            if x == k:
                return j - i
    raise ValueError("entry not in tableau")


def tableau_descents(t):
    """Entries i with i+1 strictly lower than i in the tableau."""
    pos = tableau_positions(t)
    n = len(pos)
    return frozenset(i for i in range(1, n) if pos[i + 1][0] > pos[i][0])


def num_standard_tableaux(la):
    return len(standard_tableaux(tuple(la)))


# ---------------------------------------------------------------------------
# ribbons
# ---------------------------------------------------------------------------

def ribbon_size(theta):
    return sum(sum(comp) for comp in theta)


def ribbon_pattern(theta):
    """Consecutive-position constraints of the reading word of theta.

    Boxes are read component by component (top component first), row by
    row from the top.  Entry +1 demands an ascent, -1 a descent, 0 no
    constraint (component break).
    """
    pattern = []
    first_component = True
    for comp in theta:
        if not first_component:
            pattern.append(0)
        first_component = False
        first_row = True
        for p in comp:
            if not first_row:
                pattern.append(-1)
            first_row = False
            pattern.extend([1] * (p - 1))
    return tuple(pattern)


def ribbon_compatible(theta, n):
    """All permutations whose reading word fills theta as a skew standard
    tableau: rows increase left to right, columns increase bottom to top."""
    if ribbon_size(theta) != n:
        raise ValueError("ribbon has %d boxes, expected %d" % (ribbon_size(theta), n))
    pattern = ribbon_pattern(theta)
    out = []
    for w in all_perms(n):
        ok = True
        for i, p in enumerate(pattern):
            if p == 1 and not w[i] < w[i + 1]:
                ok = False
                break
            if p == -1 and not w[i] > w[i + 1]:
                ok = False
                break
        if ok:
            out.append(w)
    return tuple(out)
