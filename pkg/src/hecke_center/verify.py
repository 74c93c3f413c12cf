"""Theorem verification sweeps with reproducible pass/fail reports.

Each named check runs at a single rank n and returns a VerificationReport;
a failing matrix comparison carries the first offending cell with both
values in canonical string form.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .coeff import BIG_Q, LaurentPoly, RatFun, as_ratfun, scalar_str, simplify_scalar
from .combi import (
    all_perms,
    compositions,
    coset_representatives,
    num_standard_tableaux,
    partitions,
    perm_mul,
    recoils,
    tableau_content,
    zeta_generators,
    zeta_permutation,
)
from .hecke import (
    HeckeElement,
    gen_t,
    is_central,
    jm_element,
    jm_elementary,
    multiply,
    normalize,
    scalar_product,
    subgroup_conjugation_sum,
    xi_monomial,
    yang_baxter_dual_check,
    zeta,
    zeta_multiplication_diagonal,
)
from . import center as _center
from . import characters as _characters
from .symfunc import QMatrix, transition_matrix


@dataclass
class VerificationReport:
    theorem: str
    n: int
    status: str
    witness: dict | None = None
    elapsed: float = 0.0
    matrices: list = field(default_factory=list)

    @property
    def ok(self):
        return self.status == "pass"

    def line(self):
        out = "%-4s theorem=%s n=%d elapsed=%.2fs" % (
            self.status.upper(), self.theorem, self.n, self.elapsed)
        if self.witness:
            out += "  witness=%s" % (self.witness,)
        return out


def _fail_cell(expected, actual):
    """First differing cell of two label-compatible matrices."""
    for i, la in enumerate(expected.rows):
        for j, mu in enumerate(expected.cols):
            a = expected.entries[i][j]
            b = actual.entries[i][j]
            if as_ratfun(a) != as_ratfun(b):
                return {
                    "row": "".join(map(str, la)),
                    "col": "".join(map(str, mu)),
                    "expected": scalar_str(a),
                    "actual": scalar_str(b),
                }
    return None


def _matrix_check(name, n, expected, actual, extra=None):
    if expected == actual and not extra:
        return True, None
    if expected != actual:
        return False, _fail_cell(expected, actual)
    return False, extra


def check_n1(n):
    actual = _center.family_transition(n, "n1")
    expected = _center._theorem_matrix(n, "n1")
    ok, witness = _matrix_check("n1", n, expected, actual)
    return ok, witness, [("N(1) family in Gamma basis", actual)]


def check_ntomega(n):
    actual = _center.family_transition(n, "ntomega")
    expected = _center._theorem_matrix(n, "ntomega")
    ok, witness = _matrix_check("ntomega", n, expected, actual)
    return ok, witness, [("N(T_omega^2) family in Gamma basis", actual)]


def check_fj(n):
    actual = _center.family_transition(n, "jones")
    expected = _center._theorem_matrix(n, "jones")
    ok, witness = _matrix_check("fj", n, expected, actual)
    return ok, witness, [("Jones family in Gamma basis", actual)]


def check_scal_jm(n):
    """Exhaustive normalized-JM-monomial scalar products against recoil
    counts; at n = 5 this includes the printed 2Q^2 example."""
    reps_cache = {I: coset_representatives(n, I, "min", "right")
                  for I in compositions(n)}
    for I in compositions(n):
        bit_choices = [[(0,) + u for u in itertools.product((0, 1), repeat=p - 1)]
                       for p in I]
        for uu in itertools.product(*bit_choices):
            rec = xi_monomial(uu, I)
            elt = normalize(I, rec["element"])
            sigma = rec["sigma"]
            wsigmas = [perm_mul(w, sigma) for w in reps_cache[I]]
            for J in compositions(n):
                req = zeta_generators(J)
                count = sum(1 for v in wsigmas if req <= recoils(v))
                raw = scalar_product(elt, zeta(J))
                got = simplify_scalar(as_ratfun(raw) * RatFun(1, BIG_Q ** (n - len(J))))
                if got != count:
                    return False, {"I": I, "uu": uu, "J": J,
                                   "expected": str(count), "actual": scalar_str(got)}, []
    if n == 5:
        rec = xi_monomial([(0, 0, 1), (0, 1)], (3, 2))
        val = scalar_product(normalize((3, 2), rec["element"]), zeta((2, 2, 1)))
        if simplify_scalar(val) != simplify_scalar(2 * BIG_Q ** 2):
            return False, {"expected": "2*Q^2", "actual": scalar_str(val)}, []
    return True, None, []


def check_car(n):
    """Trace-route character tables of both families, cross-checked
    against the closed factorization."""
    car = _characters.char_table(n, "zeta", "trace")
    factor = _characters.car_factorization(n)
    ok, witness = _matrix_check("car", n, factor, QMatrix(car.rows, car.cols, car.entries))
    caru = _characters.char_table(n, "upsilon", "trace")
    return ok, witness, [("zeta character table", car),
                         ("upsilon character table", caru)]


def check_car_factorization(n):
    car = _characters.char_table(n, "zeta", "trace")
    expected = _characters.car_factorization(n)
    ok, witness = _matrix_check("car-factorization", n, expected,
                                QMatrix(car.rows, car.cols, car.entries))
    return ok, witness, [("character table factorization", expected)]


def check_route_agreement(n):
    for fam in ("zeta", "upsilon"):
        a = _characters.char_table(n, fam, "trace")
        b = _characters.char_table(n, fam, "ram")
        ma = QMatrix(a.rows, a.cols, a.entries)
        mb = QMatrix(b.rows, b.cols, b.entries)
        if ma != mb:
            return False, dict(_fail_cell(ma, mb), family=fam), []
    return True, None, []


def check_fjchar(n):
    actual = _characters.family_char_matrix(n, "jones")
    expected = (_characters.diagonal_matrix(n, "D1")
                * transition_matrix(n, "p", "s")
                * _characters.diagonal_matrix(n, "D2")).simplified()
    ok, witness = _matrix_check("fjchar", n, expected, actual)
    return ok, witness, [("Jones family characters", actual)]


def check_ncarre(n):
    d2 = _characters.diagonal_matrix(n, "D2")
    box = _characters.family_char_matrix(n, "box")
    exp_box = (transition_matrix(n, "h", "s") * d2).simplified()
    if box != exp_box:
        return False, _fail_cell(exp_box, box), []
    nabla = _characters.family_char_matrix(n, "nabla")
    exp_nabla = (transition_matrix(n, "e", "s") * d2).simplified()
    if nabla != exp_nabla:
        return False, _fail_cell(exp_nabla, nabla), []
    return True, None, [("box family characters", box),
                        ("nabla family characters", nabla)]


def check_fj2(n):
    gr = _center.central_family(n, "gr")
    full = jm_elementary(n, n - 1)
    if full != gr[(n,)]:
        return False, {"identity": "x_2..x_n = Gamma_n"}, []
    if n >= 2:
        sub = subgroup_conjugation_sum((n - 1, 1), zeta((n,)))
        if sub != full:
            return False, {"identity": "subgroup conjugation sum"}, []
    for k in range(n):
        coeffs = _center.decompose_central(jm_elementary(n, k), check=False)
        for la in partitions(n):
            expect = 1 if len(la) == n - k else 0
            if simplify_scalar(coeffs[la]) != expect:
                return False, {"k": k, "la": la,
                               "expected": str(expect),
                               "actual": scalar_str(coeffs[la])}, []
    return True, None, []


def check_ncsf(n):
    for J in compositions(n):
        for K in compositions(n):
            left, middle, right = _center.solomon_data(J, K)
            if not (left == middle == right):
                return False, {"J": J, "K": K}, []
    return True, None, []


def check_yang(n):
    for v in (tuple(range(1, n + 1)), tuple(range(n, 0, -1))):
        if not yang_baxter_dual_check(v, n):
            return False, {"v": v}, []
    return True, None, []


def check_diagram(n):
    report = _center.diagram_checks(n)
    bad = [k for k, v in report.items() if not v]
    if bad:
        return False, {"failed": bad}, []
    return True, None, []


def check_props(n):
    """Property suite: generator relations, JM commutativity, centrality
    and span of the families, Francis characterization, the exhaustive
    scalar-product lemma, the 0-Hecke diagonal remark, seminormal
    diagonality and the dimension identity."""
    import math
    # quadratic and braid relations
    for i in range(1, n):
        t = gen_t(n, i)
        if multiply(t, t) != t.scale(BIG_Q) + HeckeElement.unit(n):
            return False, {"relation": "quadratic", "i": i}, []
    for i in range(1, n - 1):
        a = multiply(multiply(gen_t(n, i), gen_t(n, i + 1)), gen_t(n, i))
        b = multiply(multiply(gen_t(n, i + 1), gen_t(n, i)), gen_t(n, i + 1))
        if a != b:
            return False, {"relation": "braid", "i": i}, []
    for i in range(1, n):
        for j in range(i + 2, n):
            if multiply(gen_t(n, i), gen_t(n, j)) != multiply(gen_t(n, j), gen_t(n, i)):
                return False, {"relation": "commutation", "i": i, "j": j}, []
    # JM subcommutativity
    xis = [jm_element("xi", i, n) for i in range(1, n + 1)]
    for a in range(len(xis)):
        for b in range(a + 1, len(xis)):
            if multiply(xis[a], xis[b]) != multiply(xis[b], xis[a]):
                return False, {"relation": "JM commute", "i": a + 1, "j": b + 1}, []
    # centrality and span; plain class sums are central only at Q=0
    for kind in _center.CENTRAL_KINDS:
        fam = _center.central_family(n, kind)
        for la in partitions(n):
            if not is_central(fam[la]):
                return False, {"family": kind, "la": la}, []
        try:
            fam.gram_with_zeta().inverse()
        except ValueError:
            return False, {"family": kind, "issue": "gram singular"}, []
    if n >= 3:
        cs = _center.central_family(n, "class_sum")
        if is_central(cs[(n,)]):
            return False, {"family": "class_sum",
                           "issue": "long-cycle class sum became central"}, []
    if not _center.verify_francis(_center.central_family(n, "gr")):
        return False, {"check": "francis"}, []
    # scalar-product lemma, exhaustively, on both coset sides
    from .hecke import _mul_basis_left, _mul_basis_right
    for J in compositions(n):
        req = zeta_generators(J)
        qj = simplify_scalar(BIG_Q ** (n - len(J)))
        wj = zeta_permutation(J)
        maxright = set(coset_representatives(n, J, "max", "right"))
        for w in all_perms(n):
            val = simplify_scalar(_mul_basis_left(wj, {w: 1}).get(w, 0))
            if val != (qj if req <= recoils(w) else 0):
                return False, {"check": "scalar lemma left", "J": J, "w": w}, []
            val2 = simplify_scalar(_mul_basis_right({w: 1}, wj).get(w, 0))
            if val2 != (qj if w in maxright else 0):
                return False, {"check": "scalar lemma right", "J": J, "w": w}, []
    # 0-Hecke diagonal remark
    if n <= 4:
        for J in compositions(n):
            d1 = zeta_multiplication_diagonal(J, zero_hecke=False)
            d2 = zeta_multiplication_diagonal(J, zero_hecke=True)
            for w in all_perms(n):
                if simplify_scalar(d1[w]) != simplify_scalar(d2[w]):
                    return False, {"check": "0-Hecke diagonal", "J": J, "w": w}, []
    # seminormal JM diagonality
    for la in partitions(n):
        rep = _characters.seminormal_rep(la)
        for i in range(1, n + 1):
            m = _characters.rep_element(la, jm_element("xi", i, n))
            for r, t in enumerate(rep.tableaux):
                for c in range(rep.dim):
                    if r == c:
                        want = LaurentPoly({2 * tableau_content(t, i): 1})
                        if as_ratfun(m[r][c]) != as_ratfun(want):
                            return False, {"check": "JM diagonal", "la": la, "i": i}, []
                    elif m[r][c]:
                        return False, {"check": "JM diagonal", "la": la, "i": i}, []
    if sum(num_standard_tableaux(la) ** 2 for la in partitions(n)) != math.factorial(n):
        return False, {"check": "sum f^2 = n!"}, []
    return True, None, []


THEOREMS = {
    "n1": check_n1,
    "ntomega": check_ntomega,
    "fj": check_fj,
    "scal-jm": check_scal_jm,
    "car": check_car,
    "car-factorization": check_car_factorization,
    "route-agreement": check_route_agreement,
    "fjchar": check_fjchar,
    "ncarre": check_ncarre,
    "fj2": check_fj2,
    "ncsf": check_ncsf,
    "yang": check_yang,
    "diagram": check_diagram,
    "props": check_props,
}


def run_theorem(name, n):
    if name not in THEOREMS:
        raise KeyError("unknown theorem %r" % name)
    start = time.time()
    ok, witness, matrices = THEOREMS[name](n)
    return VerificationReport(name, n, "pass" if ok else "fail",
                              witness, time.time() - start, matrices)


def run_all(n, names=None, max_workers=1):
    names = list(names or THEOREMS)
    if max_workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            futures = [pool.submit(run_theorem, name, n) for name in names]
            return [f.result() for f in futures]
    return [run_theorem(name, n) for name in names]
