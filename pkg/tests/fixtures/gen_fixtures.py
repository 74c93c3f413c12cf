"""Regenerate the golden matrix fixtures.

Every matrix below is a transcription of a published reference table,
entered as exact expressions and serialized through the canonical scalar
grammar.  Run from the repository root:  python tests/fixtures/gen_fixtures.py

Two entries of the box/nabla element tables are entered with exponent
q^(+-2) on the (2,2) diagonal: the reference's q^(+-3) contradicts its own
per-part trace rule and the trace-route computation (see the notes ledger).
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from hecke_center.coeff import (  # noqa: E402
    BIG_Q as Q,
    LaurentPoly,
    RatFun,
    qint_product,
    scalar_str,
)
from hecke_center.combi import partitions  # noqa: E402

HERE = Path(__file__).resolve().parent


def q(k=1):
    return LaurentPoly({k: 1})


def br(*ks):
    return qint_product(ks)


def inv(x):
    return RatFun(1, x)


def write(name, n, entries, rows=None, cols=None):
    rows = rows or partitions(n)
    cols = cols or rows
    data = {
        "n": n,
        "rows": ["".join(map(str, la)) for la in rows],
        "cols": ["".join(map(str, mu)) for mu in cols],
        "entries": [[scalar_str(x) for x in row] for row in entries],
    }
    path = HERE / (name + ".json")
    path.write_text(json.dumps(data, indent=1) + "\n")
    print("wrote", path.name)


# Th. N1 at n = 4: the normalized-unit family in the Gamma basis.
write("n1_n4", 4, [
    [0, 0, 0, 0, 1],
    [0, 0, 0, Q, 4],
    [0, 0, Q**2, 2 * Q, 6],
    [0, Q**2, 2 * Q**2, 5 * Q, 12],
    [Q**3, 4 * Q**2, 6 * Q**2, 12 * Q, 24],
])

# Th. NTomega at n = 5.
write("ntomega_n5", 5, [
    [Q**4, Q**3, Q**3, Q**2, Q**2, Q, 1],
    [Q**4, 2 * Q**3, 2 * Q**3, 3 * Q**2, 3 * Q**2, 4 * Q, 5],
    [Q**4, 2 * Q**3, 3 * Q**3, 4 * Q**2, 5 * Q**2, 7 * Q, 10],
    [Q**4, 3 * Q**3, 4 * Q**3, 7 * Q**2, 8 * Q**2, 13 * Q, 20],
    [Q**4, 3 * Q**3, 5 * Q**3, 8 * Q**2, 11 * Q**2, 18 * Q, 30],
    [Q**4, 4 * Q**3, 7 * Q**3, 13 * Q**2, 18 * Q**2, 33 * Q, 60],
    [Q**4, 5 * Q**3, 10 * Q**3, 20 * Q**2, 30 * Q**2, 60 * Q, 120],
])

# Th. FJ (Jones basis) at n = 5.
write("fj_n5", 5, [
    [1, 0, 0, 0, 0, 0, 0],
    [Q, 1, 0, 0, 0, 0, 0],
    [Q, 0, 1, 0, 0, 0, 0],
    [Q**2, 2 * Q, Q, 2, 0, 0, 0],
    [Q**2, Q, 2 * Q, 0, 2, 0, 0],
    [Q**3, 3 * Q**2, 4 * Q**2, 6 * Q, 6 * Q, 6, 0],
    [Q**4, 5 * Q**3, 10 * Q**3, 20 * Q**2, 30 * Q**2, 60 * Q, 120],
])

# Character table of the zeta elements at n = 4 (rows are irreducibles).
write("car_n4_zeta", 4, [
    [q(3), q(2), q(2), q(1), 1],
    [-q(1), q(1) * Q, q(2) - 2, 2 * q(1) - q(-1), 3],
    [0, -1, q(2) + q(-2), Q, 2],
    [q(-1), -q(-1) * Q, q(-2) - 2, q(1) - 2 * q(-1), 3],
    [-q(-3), q(-2), q(-2), -q(-1), 1],
])

# Character table of the upsilon elements at n = 4.
write("car_n4_upsilon", 4, [
    [0, 0, 0, 0, 1],
    [0, 0, 0, 1, 3],
    [0, 0, 1, 1, 2],
    [0, 1, 1, 2, 3],
    [1, 1, 1, 1, 1],
])

# Characters of the Jones family at n = 4 (rows are family elements).
write("fjchar_n4", 4, [
    [q(6) * br(2, 3), -3 * q(2) * br(2), 0, 3 * q(-2) * br(2), -q(-6) * br(2, 3)],
    [q(6) * br(2, 4), 0, -2 * br(2, 2), 0, q(-6) * br(2, 4)],
    [RatFun(q(6) * br(3, 4), br(2)), RatFun(-3 * q(2) * br(4), br(2)), 4 * br(3),
     RatFun(-3 * q(-2) * br(4), br(2)), RatFun(q(-6) * br(3, 4), br(2))],
    [q(6) * br(3, 4), 3 * q(2) * br(4), 0, -3 * q(-2) * br(4), -q(-6) * br(3, 4)],
    [q(6) * br(2, 3, 4), 9 * q(2) * br(2, 4), 4 * br(2, 2, 3),
     9 * q(-2) * br(2, 4), q(-6) * br(2, 3, 4)],
])

# The diagonal D2 and the Kostka factor of the box-family factorization.
D2_DIAG = [q(6) * br(2, 3, 4), 3 * q(2) * br(2, 4), 2 * br(2, 2, 3),
           3 * q(-2) * br(2, 4), q(-6) * br(2, 3, 4)]
KOSTKA_H2S_N4 = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [1, 1, 1, 0, 0],
    [1, 2, 1, 1, 0],
    [1, 3, 2, 3, 1],
]
write("ncarre_n4_box_family", 4,
      [[KOSTKA_H2S_N4[i][j] * D2_DIAG[j] for j in range(5)] for i in range(5)])

KOSTKA_E2S_N4 = [
    [0, 0, 0, 0, 1],
    [0, 0, 0, 1, 1],
    [0, 0, 1, 1, 1],
    [0, 1, 1, 2, 1],
    [1, 3, 2, 3, 1],
]
write("ncarre_n4_nabla_family", 4,
      [[KOSTKA_E2S_N4[i][j] * D2_DIAG[j] for j in range(5)] for i in range(5)])

# Characters of the box and nabla elements themselves (not normalized);
# diagonal times the Kostka factors, (2,2) exponent corrected.
BOX_DIAG = [q(6) * br(2, 3, 4), q(3) * br(2, 3), q(2) * br(2, 2), q(1) * br(2), 1]
write("ncarre_n4_box_elements", 4,
      [[BOX_DIAG[i] * KOSTKA_H2S_N4[i][j] for j in range(5)] for i in range(5)])
NABLA_DIAG = [q(-6) * br(2, 3, 4), q(-3) * br(2, 3), q(-2) * br(2, 2), q(-1) * br(2), 1]
write("ncarre_n4_nabla_elements", 4,
      [[NABLA_DIAG[i] * KOSTKA_E2S_N4[i][j] for j in range(5)] for i in range(5)])

# The four factors of the character-table factorization at n = 4.
P2S_TR_N4 = [
    [1, 1, 1, 1, 1],
    [-1, 0, -1, 1, 3],
    [0, -1, 2, 0, 2],
    [1, 0, -1, -1, 3],
    [-1, 1, 1, -1, 1],
]
write("car_factor_p2s_tr_n4", 4, P2S_TR_N4)
D3_DIAG = [RatFun(br(4), 4 * Q**3), RatFun(br(3), 3 * Q**2),
           RatFun(br(2, 2), 8 * Q**2), RatFun(br(2), 4 * Q), RatFun(1, 24)]
write("car_factor_d3_n4", 4,
      [[D3_DIAG[i] if i == j else 0 for j in range(5)] for i in range(5)])
P2M_N4 = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [1, 0, 2, 0, 0],
    [1, 2, 2, 2, 0],
    [1, 4, 6, 12, 24],
]
write("car_factor_p2m_n4", 4, P2M_N4)
write("car_factor_d_n4", 4,
      [[Q ** (4 - len(partitions(4)[i])) if i == j else 0 for j in range(5)]
       for i in range(5)])

# D1 of the Jones character factorization.
D1_DIAG = [inv(br(4)), inv(br(3)), inv(br(2, 2)), inv(br(2)), 1]
write("fjchar_factor_d1_n4", 4,
      [[D1_DIAG[i] if i == j else 0 for j in range(5)] for i in range(5)])
P2S_N4 = [
    [1, -1, 0, 1, -1],
    [1, 0, -1, 0, 1],
    [1, -1, 2, -1, 1],
    [1, 1, 0, -1, -1],
    [1, 3, 2, 3, 1],
]
write("fjchar_factor_p2s_n4", 4, P2S_N4)
write("fjchar_factor_d2_n4", 4,
      [[D2_DIAG[i] if i == j else 0 for j in range(5)] for i in range(5)])
