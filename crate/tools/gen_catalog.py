#!/usr/bin/env python3
"""Regenerate crates/core/data/catalog.toml.

The involution of every catalog entry is computed here without Weyl-group
elements: a painted simple coroot is negated, and an unpainted simple coroot
a_j is sent to the highest coroot of the form a_{arrow(j)} + (nonnegative
combination of painted simple coroots). The Rust library rebuilds the same
matrices from the Satake data by a different recipe and the two are compared
at load time.

Usage: python3 tools/gen_catalog.py > crates/core/data/catalog.toml
"""

from fractions import Fraction
import sys


def cartan(family, n):
    """Cartan matrix with C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering."""
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def link(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B":
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n short
        link(n - 2, n - 1, cij=-1, cji=-2)
    elif family == "C":
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n long
        link(n - 2, n - 1, cij=-2, cji=-1)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        link(0, 2)
        link(2, 3)
        link(1, 3)
        for i in range(3, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, cij=-1, cji=-2)
        link(2, 3)
    elif family == "G":
        link(0, 1, cij=-3, cji=-1)
    else:
        raise ValueError(family)
    return c


def positive_coroots(c):
    """Positive coroots as coefficient tuples in the simple coroot basis."""
    n = len(c)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(n):
                p = sum(b[k] * c[k][i] for k in range(n))  # <alpha_i, b>
                r = list(b)
                r[i] -= p
                r = tuple(r)
                if any(x > 0 for x in r) and r not in found:
                    assert all(x >= 0 for x in r)
                    found.add(r)
                    nxt.append(r)
        frontier = nxt
    return sorted(found, key=lambda v: (sum(v), v))


def theta_coroot_basis(c, painted, arrow):
    n = len(c)
    pos = positive_coroots(c)
    cols = []
    for j in range(n):
        if j in painted:
            cols.append(tuple(-1 if k == j else 0 for k in range(n)))
            continue
        t = arrow[j]
        best = None
        for r in pos:
            if r[t] != 1:
                continue
            if any(r[k] != 0 for k in range(n) if k != t and k not in painted):
                continue
            if best is None or sum(r) > sum(best):
                best = r
        cols.append(best)
    # column j = image of simple coroot j
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def theta_adjoint(c, painted, arrow):
    """Involution on the adjoint coweight lattice, fundamental coweight basis."""
    n = len(c)
    t = theta_coroot_basis(c, painted, arrow)
    # simple coroot i has fundamental-coweight coordinates = row i of C
    ct = [[c[j][i] for j in range(n)] for i in range(n)]
    m = matmul(matmul(ct, t), inverse(ct))
    out = []
    for row in m:
        assert all(x.denominator == 1 for x in row)
        out.append([int(x) for x in row])
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    assert matmul(out, out) == ident
    return out


def fixed_rank(theta):
    n = len(theta)
    m = [[Fraction(theta[i][j] - (i == j)) for j in range(n)] for i in range(n)]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(n):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return n - rank


FORMS = []


def form(label, family, ctype, params, painted, arrows, real_rank, expected_h,
         quasi_split, split, table1=True):
    FORMS.append(dict(label=label, family=family, cartan=ctype, params=params,
                      painted=painted, arrows=arrows, real_rank=real_rank,
                      expected_h=expected_h, quasi_split=quasi_split, split=split,
                      table1=table1))


def classical():
    # AI: sl(n,R), A_{n-1}
    for n in range(2, 10):
        form(f"sl({n},R)", "AI", f"A{n-1}", [n], [], [], n - 1, f"A{n-1}", True, True)
    # AII: su*(2n), A_{2n-1}
    for n in range(2, 9):
        r = 2 * n - 1
        painted = list(range(1, r + 1, 2))
        form(f"su*({2*n})", "AII", f"A{r}", [n], painted, [], n - 1, f"A{n-1}",
             False, False)
    # AIII/AIV: su(p,q), A_{p+q-1}
    for n in range(2, 10):
        r = n - 1
        for p in range(1, n // 2 + 1):
            q = n - p
            arrows = [[i, n - i] for i in range(1, p + 1) if i < n - i]
            painted = list(range(p + 1, n - p))
            form(f"su({p},{q})", "AIII", f"A{r}", [p, q], painted, arrows, p,
                 f"C{p}", q - p <= 1, False)
    # BI/BII: so(p,q), p+q = 2n+1, B_n
    for n in range(2, 9):
        for p in range(1, n + 1):
            q = 2 * n + 1 - p
            painted = list(range(p + 1, n + 1))
            form(f"so({p},{q})", "BI", f"B{n}", [p, q], painted, [], p, f"C{p}",
                 p == n, p == n)
    # CI: sp(n,R)
    for n in range(2, 9):
        form(f"sp({n},R)", "CI", f"C{n}", [n], [], [], n, f"B{n}", True, True)
    # CII: sp(p,q), p+q = n
    for n in range(2, 9):
        for p in range(1, n // 2 + 1):
            q = n - p
            unpainted = set(range(2, 2 * p + 1, 2))
            painted = [i for i in range(1, n + 1) if i not in unpainted]
            form(f"sp({p},{q})", "CII", f"C{n}", [p, q], painted, [], p, f"C{p}",
                 False, False)
    # DI/DII: so(p,q), p+q = 2n, D_n
    for n in range(4, 9):
        for p in range(1, n + 1):
            q = 2 * n - p
            if p == n:
                form(f"so({p},{q})", "DI", f"D{n}", [p, q], [], [], n, f"D{n}",
                     True, True)
            elif p == n - 1:
                form(f"so({p},{q})", "DI", f"D{n}", [p, q], [], [[n - 1, n]], p,
                     f"B{p}", True, False)
            else:
                painted = list(range(p + 1, n + 1))
                form(f"so({p},{q})", "DI", f"D{n}", [p, q], painted, [], p, f"B{p}",
                     False, False)
    # DIII: so*(2n), D_n
    for n in range(4, 9):
        if n % 2 == 0:
            painted = list(range(1, n, 2))
            arrows = []
        else:
            painted = list(range(1, n - 1, 2))
            arrows = [[n - 1, n]]
        form(f"so*({2*n})", "DIII", f"D{n}", [n], painted, arrows, n // 2,
             f"C{n//2}", False, False)


def exceptional():
    form("e6(6)", "EI", "E6", [], [], [], 6, "E6", True, True)
    form("e6(2)", "EII", "E6", [], [], [[1, 6], [3, 5]], 4, "F4", True, False)
    form("e6(-14)", "EIII", "E6", [], [3, 4, 5], [[1, 6]], 2, "B2", False, False)
    form("e6(-26)", "EIV", "E6", [], [2, 3, 4, 5], [], 2, "A2", False, False)
    form("e7(7)", "EV", "E7", [], [], [], 7, "E7", True, True)
    form("e7(-5)", "EVI", "E7", [], [2, 5, 7], [], 4, "F4", False, False)
    form("e7(-25)", "EVII", "E7", [], [2, 3, 4, 5], [], 3, "C3", False, False)
    form("e8(8)", "EVIII", "E8", [], [], [], 8, "E8", True, True)
    form("e8(-24)", "EIX", "E8", [], [2, 3, 4, 5], [], 4, "F4", False, False)
    form("f4(4)", "FI", "F4", [], [], [], 4, "F4", True, True)
    form("f4(-20)", "FII", "F4", [], [1, 2, 3], [], 1, "A1", False, False)
    form("g2(2)", "G", "G2", [], [], [], 2, "G2", True, True)


def compact():
    seen = []
    for f in FORMS:
        if f["cartan"] not in seen:
            seen.append(f["cartan"])
    for ct in seen:
        n = int(ct[1:])
        form(f"compact {ct}", "compact", ct, [], list(range(1, n + 1)), [], 0, "",
             False, False, table1=False)


TORI = [
    ("torus split T1", [[1]], 1),
    ("torus compact T1", [[-1]], 0),
    ("torus C^x", [[0, 1], [1, 0]], 1),
]


def toml_list(xs):
    return "[" + ", ".join(str(x) for x in xs) + "]"


def emit(out):
    out.write("# Real forms of simple complex groups, adjoint coweight lattice.\n")
    out.write("# Generated by tools/gen_catalog.py; see docs/catalog-format.md.\n")
    out.write('schema = "realgr-catalog/1"\n')
    out.write('version = "1.0.0"\n')
    for f in FORMS:
        ct = f["cartan"]
        c = cartan(ct[0], int(ct[1:]))
        n = len(c)
        painted = {i - 1 for i in f["painted"]}
        arrow = list(range(n))
        for a, b in f["arrows"]:
            arrow[a - 1], arrow[b - 1] = b - 1, a - 1
        theta = theta_adjoint(c, painted, arrow)
        assert fixed_rank(theta) == f["real_rank"], f["label"]
        assert f["quasi_split"] == (not f["painted"]), f["label"]
        f["split"] = all(theta[i][j] == (i == j) for i in range(n) for j in range(n))
        out.write("\n[[form]]\n")
        out.write(f'label = "{f["label"]}"\n')
        out.write(f'family = "{f["family"]}"\n')
        out.write(f'cartan = "{ct}"\n')
        out.write(f"params = {toml_list(f['params'])}\n")
        out.write(f"painted = {toml_list(f['painted'])}\n")
        out.write("arrows = [" + ", ".join(toml_list(a) for a in f["arrows"]) + "]\n")
        out.write("theta = [" + ", ".join(toml_list(r) for r in theta) + "]\n")
        out.write(f"real_rank = {f['real_rank']}\n")
        out.write(f'expected_h = "{f["expected_h"]}"\n')
        out.write(f"quasi_split = {str(f['quasi_split']).lower()}\n")
        out.write(f"split = {str(f['split']).lower()}\n")
        out.write(f"table1 = {str(f['table1']).lower()}\n")


def emit_tori(out):
    for label, theta, rr in TORI:
        out.write("\n[[form]]\n")
        out.write(f'label = "{label}"\n')
        out.write('family = "torus"\n')
        out.write(f'cartan = "T{len(theta)}"\n')
        out.write("params = []\npainted = []\narrows = []\n")
        out.write("theta = [" + ", ".join(toml_list(r) for r in theta) + "]\n")
        out.write(f"real_rank = {rr}\n")
        out.write(f'expected_h = "T{rr}"\n')
        split = all(theta[i][j] == (i == j) for i in range(len(theta)) for j in range(len(theta)))
        out.write("quasi_split = true\n")
        out.write(f"split = {str(split).lower()}\n")
        out.write("table1 = false\n")


if __name__ == "__main__":
    classical()
    exceptional()
    compact()
    emit(sys.stdout)
    emit_tori(sys.stdout)
