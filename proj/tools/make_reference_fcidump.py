#!/usr/bin/env python3
# Copyright 2026 The ccfock Authors
# SPDX-License-Identifier: Apache-2.0
"""Generate reference FCIDUMP files for systems outside the built-in
s-function engine (p shells): Li2/STO-3G and Be/6-31G.

Independent implementation path: McMurchie-Davidson integrals over
contracted Cartesian Gaussians (s and p), RHF with DIIS, four-index MO
transform, FCIDUMP export compatible with the C++ reader.

Usage: python3 tools/make_reference_fcidump.py [outdir]
Writes <outdir>/li2_sto3g.fcidump and <outdir>/be_631g.fcidump
(default outdir: tests/data). Also prints self-check RHF energies for
H2/H6 in STO-3G, which must match the C++ engine.
"""

import math
import sys

import numpy as np
from scipy.special import gammainc, gamma

BOHR_PER_ANGSTROM = 1.8897261246257702

# tabulated exponents / contraction coefficients (unnormalized primitives)
BASIS = {
    ("H", "sto-3g"): [
        ("s", [3.42525091, 0.62391373, 0.16885540],
              [0.15432897, 0.53532814, 0.44463454]),
    ],
    ("Li", "sto-3g"): [
        ("s", [16.1195750, 2.9362007, 0.7946505],
              [0.15432897, 0.53532814, 0.44463454]),
        ("s", [0.6362897, 0.1478601, 0.0480887],
              [-0.09996723, 0.39951283, 0.70011547]),
        ("p", [0.6362897, 0.1478601, 0.0480887],
              [0.15591627, 0.60768372, 0.39195739]),
    ],
    ("Be", "6-31g"): [
        ("s", [1264.5857000, 189.9368100, 43.1590890, 12.0986630, 3.8063232, 1.2728903],
              [0.0019448, 0.0148351, 0.0720906, 0.2371542, 0.4691987, 0.3565202]),
        ("s", [3.1964631, 0.7478133, 0.2199663],
              [-0.1126487, -0.2295064, 1.1869167]),
        ("p", [3.1964631, 0.7478133, 0.2199663],
              [0.0559802, 0.2615506, 0.7939723]),
        ("s", [0.0823099], [1.0]),
        ("p", [0.0823099], [1.0]),
    ],
}

CHARGES = {"H": 1.0, "Li": 3.0, "Be": 4.0}


def boys(m, x):
    if x < 1e-12:
        return 1.0 / (2 * m + 1) - x / (2 * m + 3)
    return gammainc(m + 0.5, x) * gamma(m + 0.5) / (2 * x ** (m + 0.5))


def hermite_e(i, j, t, qx, a, b):
    """Hermite expansion coefficient E_t^{ij} for a 1D Gaussian product."""
    p = a + b
    mu = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-mu * qx * qx)
    if j == 0:
        return (hermite_e(i - 1, j, t - 1, qx, a, b) / (2 * p)
                - mu * qx / a * hermite_e(i - 1, j, t, qx, a, b)
                + (t + 1) * hermite_e(i - 1, j, t + 1, qx, a, b))
    return (hermite_e(i, j - 1, t - 1, qx, a, b) / (2 * p)
            + mu * qx / b * hermite_e(i, j - 1, t, qx, a, b)
            + (t + 1) * hermite_e(i, j - 1, t + 1, qx, a, b))


def overlap_prim(la, lb, a, b, A, B):
    p = a + b
    out = (math.pi / p) ** 1.5
    for d in range(3):
        out *= hermite_e(la[d], lb[d], 0, A[d] - B[d], a, b)
    return out


def kinetic_prim(la, lb, a, b, A, B):
    lb = list(lb)
    term0 = b * (2 * (lb[0] + lb[1] + lb[2]) + 3) * overlap_prim(la, lb, a, b, A, B)
    term1 = 0.0
    term2 = 0.0
    for d in range(3):
        lb2 = list(lb)
        lb2[d] += 2
        term1 += -2.0 * b * b * overlap_prim(la, lb2, a, b, A, B)
        if lb[d] >= 2:
            lbm = list(lb)
            lbm[d] -= 2
            term2 += -0.5 * lb[d] * (lb[d] - 1) * overlap_prim(la, lbm, a, b, A, B)
    return term0 + term1 + term2


def hermite_coulomb(t, u, v, n, p, PC):
    if t < 0 or u < 0 or v < 0:
        return 0.0
    if t == u == v == 0:
        return (-2.0 * p) ** n * boys(n, p * (PC[0] ** 2 + PC[1] ** 2 + PC[2] ** 2))
    if t > 0:
        return ((t - 1) * hermite_coulomb(t - 2, u, v, n + 1, p, PC)
                + PC[0] * hermite_coulomb(t - 1, u, v, n + 1, p, PC))
    if u > 0:
        return ((u - 1) * hermite_coulomb(t, u - 2, v, n + 1, p, PC)
                + PC[1] * hermite_coulomb(t, u - 1, v, n + 1, p, PC))
    return ((v - 1) * hermite_coulomb(t, u, v - 2, n + 1, p, PC)
            + PC[2] * hermite_coulomb(t, u, v - 1, n + 1, p, PC))


def nuclear_prim(la, lb, a, b, A, B, C):
    p = a + b
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    PC = P - np.asarray(C)
    val = 0.0
    for t in range(la[0] + lb[0] + 1):
        et = hermite_e(la[0], lb[0], t, A[0] - B[0], a, b)
        for u in range(la[1] + lb[1] + 1):
            eu = hermite_e(la[1], lb[1], u, A[1] - B[1], a, b)
            for v in range(la[2] + lb[2] + 1):
                ev = hermite_e(la[2], lb[2], v, A[2] - B[2], a, b)
                val += et * eu * ev * hermite_coulomb(t, u, v, 0, p, PC)
    return 2.0 * math.pi / p * val


def eri_prim(la, lb, lc, ld, a, b, c, d, A, B, C, D):
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    Q = (c * np.asarray(C) + d * np.asarray(D)) / q
    PQ = P - Q
    val = 0.0
    for t in range(la[0] + lb[0] + 1):
        et = hermite_e(la[0], lb[0], t, A[0] - B[0], a, b)
        for u in range(la[1] + lb[1] + 1):
            eu = hermite_e(la[1], lb[1], u, A[1] - B[1], a, b)
            for v in range(la[2] + lb[2] + 1):
                ev = hermite_e(la[2], lb[2], v, A[2] - B[2], a, b)
                e1 = et * eu * ev
                if e1 == 0.0:
                    continue
                for tt in range(lc[0] + ld[0] + 1):
                    ft = hermite_e(lc[0], ld[0], tt, C[0] - D[0], c, d)
                    for uu in range(lc[1] + ld[1] + 1):
                        fu = hermite_e(lc[1], ld[1], uu, C[1] - D[1], c, d)
                        for vv in range(lc[2] + ld[2] + 1):
                            fv = hermite_e(lc[2], ld[2], vv, C[2] - D[2], c, d)
                            e2 = ft * fu * fv
                            if e2 == 0.0:
                                continue
                            val += (e1 * e2 * (-1.0) ** (tt + uu + vv)
                                    * hermite_coulomb(t + tt, u + uu, v + vv, 0, alpha, PQ))
    return val * 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))


def prim_norm(l, alpha):
    lx, ly, lz = l
    L = lx + ly + lz
    df = lambda n: 1.0 if n <= 1 else n * df(n - 2)
    return ((2.0 * alpha / math.pi) ** 0.75 * (4.0 * alpha) ** (L / 2.0)
            / math.sqrt(df(2 * lx - 1) * df(2 * ly - 1) * df(2 * lz - 1)))


class BasisFunction:
    def __init__(self, l, exps, coefs, center):
        self.l = tuple(l)
        self.exps = list(exps)
        self.center = np.asarray(center, dtype=float)
        raw = [c * prim_norm(self.l, e) for c, e in zip(coefs, exps)]
        s = 0.0
        for ci, ei in zip(raw, exps):
            for cj, ej in zip(raw, exps):
                s += ci * cj * overlap_prim(self.l, self.l, ei, ej, self.center, self.center)
        self.coefs = [c / math.sqrt(s) for c in raw]


def build_basis(atoms, basis_name):
    fns = []
    for sym, pos in atoms:
        for kind, exps, coefs in BASIS[(sym, basis_name)]:
            if kind == "s":
                fns.append(BasisFunction((0, 0, 0), exps, coefs, pos))
            else:
                for l in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
                    fns.append(BasisFunction(l, exps, coefs, pos))
    return fns


def contract2(f, g, prim):
    out = 0.0
    for ci, ei in zip(f.coefs, f.exps):
        for cj, ej in zip(g.coefs, g.exps):
            out += ci * cj * prim(f.l, g.l, ei, ej, f.center, g.center)
    return out


def compute_integrals(atoms, basis_name):
    fns = build_basis(atoms, basis_name)
    n = len(fns)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for p in range(n):
        for q in range(p + 1):
            S[p, q] = S[q, p] = contract2(fns[p], fns[q], overlap_prim)
            T[p, q] = T[q, p] = contract2(fns[p], fns[q], kinetic_prim)
            v = 0.0
            for sym, pos in atoms:
                v -= CHARGES[sym] * contract2(
                    fns[p], fns[q],
                    lambda la, lb, a, b, A, B: nuclear_prim(la, lb, a, b, A, B, pos))
            V[p, q] = V[q, p] = v
    eri = np.zeros((n, n, n, n))
    for p in range(n):
        for q in range(p + 1):
            for r in range(p + 1):
                smax = q if r == p else r
                for s in range(smax + 1):
                    val = 0.0
                    fp, fq, fr, fs = fns[p], fns[q], fns[r], fns[s]
                    for c1, e1 in zip(fp.coefs, fp.exps):
                        for c2, e2 in zip(fq.coefs, fq.exps):
                            for c3, e3 in zip(fr.coefs, fr.exps):
                                for c4, e4 in zip(fs.coefs, fs.exps):
                                    val += c1 * c2 * c3 * c4 * eri_prim(
                                        fp.l, fq.l, fr.l, fs.l, e1, e2, e3, e4,
                                        fp.center, fq.center, fr.center, fs.center)
                    for idx in {(p, q, r, s), (q, p, r, s), (p, q, s, r), (q, p, s, r),
                                (r, s, p, q), (s, r, p, q), (r, s, q, p), (s, r, q, p)}:
                        eri[idx] = val
    e_nuc = 0.0
    for i, (sym_i, pos_i) in enumerate(atoms):
        for j, (sym_j, pos_j) in enumerate(atoms):
            if j <= i:
                continue
            e_nuc += (CHARGES[sym_i] * CHARGES[sym_j]
                      / np.linalg.norm(np.asarray(pos_i) - np.asarray(pos_j)))
    return S, T, V, eri, e_nuc


def rhf(S, T, V, eri, e_nuc, n_elec, tol=1e-11, max_iter=200):
    n = S.shape[0]
    n_occ = n_elec // 2
    hcore = T + V
    evals, evecs = np.linalg.eigh(S)
    X = evecs @ np.diag(evals ** -0.5) @ evecs.T

    def orbitals(F):
        eps, Cp = np.linalg.eigh(X.T @ F @ X)
        return eps, X @ Cp

    eps, C = orbitals(hcore)
    D = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T
    focks, errs = [], []
    for _ in range(max_iter):
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        F = hcore + J - 0.5 * K
        err = F @ D @ S - S @ D @ F
        if np.max(np.abs(err)) < tol:
            eps, C = orbitals(F)
            e = 0.5 * np.sum(D * (hcore + F)) + e_nuc
            return e, eps, C
        focks.append(F)
        errs.append(X.T @ err @ X)
        if len(focks) > 8:
            focks.pop(0)
            errs.pop(0)
        if len(focks) > 1:
            m = len(focks)
            B = -np.ones((m + 1, m + 1))
            B[m, m] = 0.0
            for i in range(m):
                for j in range(m):
                    B[i, j] = np.sum(errs[i] * errs[j])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            c = np.linalg.solve(B, rhs)
            F = sum(ci * Fi for ci, Fi in zip(c[:m], focks))
        eps, C = orbitals(F)
        D = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T
    raise RuntimeError("SCF did not converge")


def write_fcidump(path, h, g, e_nuc, n_elec):
    n = h.shape[0]
    with open(path, "w") as out:
        out.write(f"&FCI NORB={n},NELEC={n_elec},MS2=0,\n ORBSYM=" + "1," * n
                  + "\n ISYM=1,\n&END\n")
        for p in range(n):
            for q in range(p + 1):
                for r in range(p + 1):
                    smax = q if r == p else r
                    for s in range(smax + 1):
                        if abs(g[p, q, r, s]) > 0.0:
                            out.write(" %.16E %3d %3d %3d %3d\n"
                                      % (g[p, q, r, s], p + 1, q + 1, r + 1, s + 1))
        for p in range(n):
            for q in range(p + 1):
                if abs(h[p, q]) > 0.0:
                    out.write(" %.16E %3d %3d %3d %3d\n" % (h[p, q], p + 1, q + 1, 0, 0))
        out.write(" %.16E %3d %3d %3d %3d\n" % (e_nuc, 0, 0, 0, 0))


def make_system(atoms, basis_name, n_elec, path):
    S, T, V, eri, e_nuc = compute_integrals(atoms, basis_name)
    e_rhf, eps, C = rhf(S, T, V, eri, e_nuc, n_elec)
    h_mo = C.T @ (T + V) @ C
    g_mo = np.einsum("mnls,mp->pnls", eri, C, optimize=True)
    g_mo = np.einsum("pnls,nq->pqls", g_mo, C, optimize=True)
    g_mo = np.einsum("pqls,lr->pqrs", g_mo, C, optimize=True)
    g_mo = np.einsum("pqrs,st->pqrt", g_mo, C, optimize=True)
    write_fcidump(path, h_mo, g_mo, e_nuc, n_elec)
    return e_rhf, eps


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "tests/data"

    # self-checks against the built-in s-function engine
    e_h2, _ = make_system([("H", (0, 0, 0)), ("H", (0, 0, 1.4))], "sto-3g", 2,
                          "/tmp/h2_check.fcidump")
    print(f"H2/STO-3G  RHF = {e_h2:.12f}  (engine: -1.116714325063)")
    h6 = [("H", (0, 0, 2.0 * k)) for k in range(6)]
    e_h6, _ = make_system(h6, "sto-3g", 6, "/tmp/h6_check.fcidump")
    print(f"H6/STO-3G  RHF = {e_h6:.12f}  (engine: -3.105850130348)")

    r = 2.673 * BOHR_PER_ANGSTROM
    e_li2, eps = make_system([("Li", (0, 0, 0)), ("Li", (0, 0, r))], "sto-3g", 6,
                             f"{outdir}/li2_sto3g.fcidump")
    print(f"Li2/STO-3G RHF = {e_li2:.12f}   n_orb = {len(eps)}")

    e_be, eps = make_system([("Be", (0, 0, 0))], "6-31g", 4, f"{outdir}/be_631g.fcidump")
    print(f"Be/6-31G   RHF = {e_be:.12f}   n_orb = {len(eps)}")


if __name__ == "__main__":
    main()
