#!/usr/bin/env python3
"""Generate the frozen FCIDUMP inputs used by the test suite.

Restricted Hartree-Fock over s-type contracted Gaussians (hydrogen chains and
H2 in STO-3G / 6-31G), followed by an MO transform and an FCIDUMP dump. Only
s functions are needed, so all integrals have closed forms via the Boys F0
function. Outputs are committed under tests/data/fcidump; rerun this script
only to regenerate them.
"""

import math
import os
import sys

import numpy as np

ANGSTROM_TO_BOHR = 1.8897259886

# exponents, contraction coefficients (normalized primitives implied)
BASES = {
    "sto-3g": [
        ([3.42525091, 0.62391373, 0.16885540],
         [0.15432897, 0.53532814, 0.44463454]),
    ],
    "6-31g": [
        ([18.7311370, 2.8253937, 0.6401217],
         [0.03349460, 0.23472695, 0.81375733]),
        ([0.1612778], [1.0]),
    ],
}


def boys_f0(t):
    if t < 1e-12:
        return 1.0 - t / 3.0
    st = math.sqrt(t)
    return 0.5 * math.sqrt(math.pi / t) * math.erf(st)


def prim_norm(a):
    return (2.0 * a / math.pi) ** 0.75


class Shell:
    def __init__(self, center, exps, coefs):
        self.center = np.asarray(center, dtype=float)
        self.exps = list(exps)
        self.coefs = [c * prim_norm(a) for a, c in zip(exps, coefs)]
        # normalize the contraction
        s = 0.0
        for a, ca in zip(self.exps, self.coefs):
            for b, cb in zip(self.exps, self.coefs):
                s += ca * cb * (math.pi / (a + b)) ** 1.5
        self.coefs = [c / math.sqrt(s) for c in self.coefs]


def s_overlap(a, A, b, B):
    p = a + b
    ab2 = float(np.dot(A - B, A - B))
    return (math.pi / p) ** 1.5 * math.exp(-a * b / p * ab2)


def s_kinetic(a, A, b, B):
    p = a + b
    ab2 = float(np.dot(A - B, A - B))
    mu = a * b / p
    return mu * (3.0 - 2.0 * mu * ab2) * (math.pi / p) ** 1.5 * math.exp(-mu * ab2)


def s_nuclear(a, A, b, B, C, Z):
    p = a + b
    ab2 = float(np.dot(A - B, A - B))
    P = (a * A + b * B) / p
    pc2 = float(np.dot(P - C, P - C))
    return -Z * 2.0 * math.pi / p * math.exp(-a * b / p * ab2) * boys_f0(p * pc2)


def s_eri(a, A, b, B, c, C, d, D):
    p = a + b
    q = c + d
    P = (a * A + b * B) / p
    Q = (c * C + d * D) / q
    ab2 = float(np.dot(A - B, A - B))
    cd2 = float(np.dot(C - D, C - D))
    pq2 = float(np.dot(P - Q, P - Q))
    pref = 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))
    return pref * math.exp(-a * b / p * ab2 - c * d / q * cd2) * boys_f0(p * q / (p + q) * pq2)


def build_integrals(atoms, basis_name):
    shells = []
    for center, _ in atoms:
        for exps, coefs in BASES[basis_name]:
            shells.append(Shell(center, exps, coefs))
    n = len(shells)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i, si in enumerate(shells):
        for j, sj in enumerate(shells):
            for a, ca in zip(si.exps, si.coefs):
                for b, cb in zip(sj.exps, sj.coefs):
                    S[i, j] += ca * cb * s_overlap(a, si.center, b, sj.center)
                    T[i, j] += ca * cb * s_kinetic(a, si.center, b, sj.center)
                    for C, Z in atoms:
                        V[i, j] += ca * cb * s_nuclear(a, si.center, b, sj.center, np.asarray(C), Z)
    eri = np.zeros((n, n, n, n))  # chemists (ij|kl)
    for i, si in enumerate(shells):
        for j, sj in enumerate(shells):
            for k, sk in enumerate(shells):
                for l, sl in enumerate(shells):
                    v = 0.0
                    for a, ca in zip(si.exps, si.coefs):
                        for b, cb in zip(sj.exps, sj.coefs):
                            for c, cc in zip(sk.exps, sk.coefs):
                                for d, cd in zip(sl.exps, sl.coefs):
                                    v += ca * cb * cc * cd * s_eri(
                                        a, si.center, b, sj.center, c, sk.center, d, sl.center)
                    eri[i, j, k, l] = v
    e_nuc = 0.0
    for idx, (A, ZA) in enumerate(atoms):
        for B, ZB in atoms[idx + 1:]:
            e_nuc += ZA * ZB / float(np.linalg.norm(np.asarray(A) - np.asarray(B)))
    return S, T + V, eri, e_nuc


def rhf(S, hcore, eri, n_elec, max_iter=200, tol=1e-12):
    n = S.shape[0]
    nocc = n_elec // 2
    w, U = np.linalg.eigh(S)
    X = U @ np.diag(w ** -0.5) @ U.T
    D = np.zeros((n, n))
    e_old = 0.0
    F = hcore
    for it in range(max_iter):
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        F = hcore + 2.0 * J - K
        Fp = X.T @ F @ X
        eps, Cp = np.linalg.eigh(Fp)
        C = X @ Cp
        Cocc = C[:, :nocc]
        D = Cocc @ Cocc.T
        e = float(np.einsum("pq,pq->", D, hcore + F))
        if abs(e - e_old) < tol and it > 1:
            break
        e_old = e
    return e, C, eps


def mo_transform(hcore, eri, C):
    h_mo = C.T @ hcore @ C
    tmp = np.einsum("pqrs,pi->iqrs", eri, C, optimize=True)
    tmp = np.einsum("iqrs,qj->ijrs", tmp, C, optimize=True)
    tmp = np.einsum("ijrs,rk->ijks", tmp, C, optimize=True)
    eri_mo = np.einsum("ijks,sl->ijkl", tmp, C, optimize=True)
    return h_mo, eri_mo


def write_fcidump(path, h_mo, eri_mo, e_nuc, n_elec, ms2=0, thresh=1e-14):
    n = h_mo.shape[0]
    with open(path, "w") as f:
        f.write("&FCI NORB=%d,NELEC=%d,MS2=%d,\n" % (n, n_elec, ms2))
        f.write(" ORBSYM=" + "1," * n + "\n")
        f.write(" ISYM=1,\n")
        f.write("&END\n")
        for i in range(n):
            for j in range(i + 1):
                for k in range(i + 1):
                    lmax = j if k == i else k
                    for l in range(lmax + 1):
                        v = eri_mo[i, j, k, l]
                        if abs(v) > thresh:
                            f.write("%23.16e %3d %3d %3d %3d\n" % (v, i + 1, j + 1, k + 1, l + 1))
        for i in range(n):
            for j in range(i + 1):
                v = h_mo[i, j]
                if abs(v) > thresh:
                    f.write("%23.16e %3d %3d %3d %3d\n" % (v, i + 1, j + 1, 0, 0))
        f.write("%23.16e %3d %3d %3d %3d\n" % (e_nuc, 0, 0, 0, 0))


def h_chain(n_atoms, spacing_angstrom):
    d = spacing_angstrom * ANGSTROM_TO_BOHR
    return [(np.array([0.0, 0.0, i * d]), 1.0) for i in range(n_atoms)]


def generate(path, atoms, basis, n_elec, label, ms2=0):
    S, hcore, eri, e_nuc = build_integrals(atoms, basis)
    e_hf, C, eps = rhf(S, hcore, eri, n_elec)
    h_mo, eri_mo = mo_transform(hcore, eri, C)
    write_fcidump(path, h_mo, eri_mo, e_nuc, n_elec, ms2=ms2)
    print("%-34s E_HF = %18.12f  (e_nuc %14.10f)" % (label, e_hf + e_nuc, e_nuc))


def h2_at(r_angstrom):
    d = r_angstrom * ANGSTROM_TO_BOHR
    return [(np.array([0.0, 0.0, 0.0]), 1.0), (np.array([0.0, 0.0, d]), 1.0)]


def main(outdir):
    os.makedirs(outdir, exist_ok=True)

    # H2 / STO-3G: minimal (2,2) register, textbook geometry plus a scan point
    generate(os.path.join(outdir, "h2_sto3g_0.7354.fcidump"),
             h2_at(0.7354), "sto-3g", 2, "H2/STO-3G r=0.7354")
    generate(os.path.join(outdir, "h2_sto3g_1.5000.fcidump"),
             h2_at(1.5), "sto-3g", 2, "H2/STO-3G r=1.5")

    # H2 / 6-31G: (2,2) active plus two virtuals; dissociation scan
    for r in [0.5, 0.7414, 0.9, 1.1, 1.4, 1.8, 2.4]:
        generate(os.path.join(outdir, "h2_631g_%6.4f.fcidump" % r),
                 h2_at(r), "6-31g", 2, "H2/6-31G r=%.4f" % r)

    # Hydrogen chains / STO-3G: every core/active/virtual partition the
    # acceptance matrix needs is a slice of one of these
    generate(os.path.join(outdir, "h4_sto3g_1.0.fcidump"),
             h_chain(4, 1.0), "sto-3g", 4, "H4 chain r=1.0")
    generate(os.path.join(outdir, "h4_sto3g_1.8.fcidump"),
             h_chain(4, 1.8), "sto-3g", 4, "H4 chain r=1.8 (stretched)")
    generate(os.path.join(outdir, "h4_sto3g_2.4.fcidump"),
             h_chain(4, 2.4), "sto-3g", 4, "H4 chain r=2.4 (stretched)")
    generate(os.path.join(outdir, "h6_sto3g_1.0.fcidump"),
             h_chain(6, 1.0), "sto-3g", 6, "H6 chain r=1.0")
    generate(os.path.join(outdir, "h6_sto3g_1.6.fcidump"),
             h_chain(6, 1.6), "sto-3g", 6, "H6 chain r=1.6")

    # H4 dissociation scan for the pipeline curve tests
    for r in [0.8, 1.0, 1.2, 1.5, 1.8, 2.2]:
        generate(os.path.join(outdir, "h4_scan_%6.4f.fcidump" % r),
                 h_chain(4, r), "sto-3g", 4, "H4 scan r=%.4f" % r)

    # H3 doublet (3 electrons, ms2=1): odd-electron coverage
    generate(os.path.join(outdir, "h3_sto3g_1.0.fcidump"),
             h_chain(3, 1.0), "sto-3g", 3, "H3 chain r=1.0 (doublet)", ms2=1)

    # H2 / 6-31G with a compact but less symmetric geometry for edge cases
    generate(os.path.join(outdir, "h2_631g_stretch_3.0.fcidump"),
             h2_at(3.0), "6-31g", 2, "H2/6-31G r=3.0")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/fcidump")
