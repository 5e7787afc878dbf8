#!/usr/bin/env python3
"""Independent recomputation of the pinned curve invariants.

Rebuilds the built-in product polynomials from scratch in sympy, assembles
the graded pieces of the Jacobian ideal over exact rationals, and reports

  - mdr: the least degree r admitting a nonzero relation
    a f_x + b f_y + c f_z = 0 with deg a = deg b = deg c = r,
  - total Tjurina number: the stable value of t -> dim (S / J_f)_t,
    scanned from t = 3 (deg f - 2) until three consecutive values agree.

This is a second implementation in a different language and linear-algebra
stack, used once to confirm the values frozen into the test suite
(see docs/crosscheck.md for the stored transcript).
"""

import sys
import time

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def poly_mul(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            key = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
            val = out.get(key, 0) + ca * cb
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def degree(f):
    return max(sum(m) for m in f)


def partials(f):
    out = []
    for v in range(3):
        p = {}
        for m, c in f.items():
            if m[v] == 0:
                continue
            key = tuple(e - (1 if i == v else 0) for i, e in enumerate(m))
            p[key] = c * m[v]
        out.append(p)
    return out


def basis(t):
    return [(i, j, t - i - j) for i in range(t, -1, -1) for j in range(t - i, -1, -1)]


def syzygy_matrix(f, r):
    """Matrix of (a, b, c) -> a f_x + b f_y + c f_z on degree-r multipliers."""
    m = degree(f)
    rows = {mono: i for i, mono in enumerate(basis(r + m - 1))}
    cols_per_block = len(basis(r))
    entries = {}
    for block, p in enumerate(partials(f)):
        for ci, mono in enumerate(basis(r)):
            col = block * cols_per_block + ci
            for pm, c in p.items():
                rm = (mono[0] + pm[0], mono[1] + pm[1], mono[2] + pm[2])
                entries.setdefault(rows[rm], {})[col] = QQ(c)
    return DomainMatrix(entries, (len(rows), 3 * cols_per_block), QQ)


def rank(dm):
    return len(dm.rref()[1])


def mdr(f):
    r = 0
    while True:
        M = syzygy_matrix(f, r)
        kernel = M.shape[1] - rank(M)
        if kernel > 0:
            return r
        r += 1


def hilbert_jacobian(f, t):
    m = degree(f)
    if t < m - 1:
        return len(basis(t))
    return len(basis(t)) - rank(syzygy_matrix(f, t - m + 1))


def total_tjurina(f):
    m = degree(f)
    run, prev, t = 0, None, 3 * (m - 2)
    while t <= 5 * m:
        h = hilbert_jacobian(f, t)
        run = run + 1 if h == prev else 1
        prev = h
        if run == 3:
            return h
        t += 1
    raise RuntimeError("no stabilization below the scan cap")


X3 = {(3, 0, 0): 1}
Y3 = {(0, 3, 0): 1}
Z3 = {(0, 0, 3): 1}
FERMAT = {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1}
XY = poly_mul(FERMAT, {(3, 0, 0): 1, (0, 3, 0): 1})  # cubic with three concurrent lines

EXAMPLES = {
    "EL6": XY,
    "EL7": poly_mul(XY, {(0, 1, 0): 1, (0, 0, 1): 1}),
    "CPPP": poly_mul(
        poly_mul(FERMAT, poly_mul({(3, 0, 0): 1, (0, 3, 0): 1}, {(0, 3, 0): 1, (0, 0, 3): 1})),
        {(3, 0, 0): 1, (0, 0, 3): 1},
    ),
    "FERMAT": FERMAT,
}


def main():
    print(f"python {sys.version.split()[0]}, sympy {sympy.__version__}")
    print(f"{'name':8} {'degree':>6} {'mdr':>4} {'tjurina':>8} {'seconds':>8}")
    for name, f in EXAMPLES.items():
        t0 = time.time()
        d1 = mdr(f)
        tau = total_tjurina(f)
        print(f"{name:8} {degree(f):>6} {d1:>4} {tau:>8} {time.time() - t0:>8.1f}")


if __name__ == "__main__":
    main()
