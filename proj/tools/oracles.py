#!/usr/bin/env python3
"""Independent reference values for the test suite.

Written directly from the square-well formulas with mpmath (30 digits) and
scipy quadrature; shares no code with the C++ library. Output is JSON; the
values are frozen into tests/oracles.hpp.
"""
import json

import mpmath as mp
import numpy as np
from scipy.integrate import quad

mp.mp.dps = 30
A = 1


def branch(z, sign):
    k = mp.sqrt(z)
    return -k if mp.im(k) * sign < 0 else k


# One channel, V0 = -4.
V0 = -4


def f_plus(k):
    q = mp.sqrt(k * k - V0)
    return mp.e ** (1j * k * A) * (mp.cos(q * A) - 1j * k / q * mp.sin(q * A))


def single_state(e0, sign):
    k0 = branch(e0, sign)
    res = f_plus(-k0) / mp.diff(lambda e: f_plus(branch(e, sign)), e0)
    n = mp.sqrt(1j / (2 * k0) * res)
    if mp.re(n) < 0:
        n = -n
    q0 = mp.sqrt(e0 - V0)
    return k0, q0, n, n * mp.e ** (1j * k0 * A) / mp.sin(q0 * A)


# Two channels.
TH = [0, 4]


def ks(e, signs):
    return [branch(e - t, s) for t, s in zip(TH, signs)]


def jost_matrix(k, v):
    a_, b_ = k[0] ** 2 - v[0][0], k[1] ** 2 - v[1][1]
    d = mp.sqrt((a_ - b_) ** 2 + 4 * v[0][1] ** 2)
    qp, qm = mp.sqrt((a_ + b_ + d) / 2), mp.sqrt((a_ + b_ - d) / 2)
    x = a_ - qp ** 2
    o = mp.matrix([[v[0][1], x], [-x, v[1][0]]]) / mp.sqrt(v[0][1] ** 2 + x ** 2)
    oi = o ** -1
    kk, ki = mp.diag(k), mp.diag([1 / k[0], 1 / k[1]])
    c = mp.diag([mp.cos(qp * A), mp.cos(qm * A)])
    s = mp.diag([mp.sin(qp * A) / qp, mp.sin(qm * A) / qm])
    ex = mp.diag([mp.e ** (1j * k[0] * A), mp.e ** (1j * k[1] * A)])
    return ex * (ki * oi * c - 1j * oi * s) * o * kk, (qp, qm, o, oi)


def two_state(e0, signs, v, rho):
    k0 = ks(e0, signs)

    def s_nu(e):
        # Continue k(E) analytically from k0 so the contour never crosses a cut.
        k = [k0[i] * mp.sqrt((e - TH[i]) / (e0 - TH[i])) for i in range(2)]
        return jost_matrix([-k[0], -k[1]], v)[0] * jost_matrix(k, v)[0] ** -1

    m = 64
    r = mp.matrix(2, 2)
    for j in range(m):
        z = rho * mp.e ** (2j * mp.pi * j / m)
        r += s_nu(e0 + z) * z / m
    nn = [[1j / 2 * r[i, j] / k0[j] for j in range(2)] for i in range(2)]
    n1 = mp.sqrt(nn[0][0])
    if mp.re(n1) < 0:
        n1 = -n1
    n2 = nn[1][0] / n1
    _, (qp, qm, o, oi) = jost_matrix(k0, v)
    ea = mp.matrix([mp.e ** (1j * k0[0] * A) * n1, mp.e ** (1j * k0[1] * A) * n2])
    b = mp.diag([1 / mp.sin(qp * A), 1 / mp.sin(qm * A)]) * o * ea
    modes = oi * mp.diag([b[0], b[1]])
    return k0, [n1, n2], modes, [qp, qm]


def gauss64():
    x, w = np.polynomial.legendre.leggauss(64)
    return (x + 1) / 2 * A, w / 2 * A


def gamma(u_interior, vrow, e_r, g_r, threshold, width):
    """Golden-rule decay constant; u_interior(x) returns the channel vector on the GL nodes."""
    x, w = gauss64()
    u = u_interior(x)
    src = sum(vrow[b] * u[b] for b in range(len(vrow)))

    def density(ep):
        k = np.sqrt(ep)
        m = np.sum(w * np.sqrt(1 / (np.pi * k)) * np.sin(k * x) * src)
        return abs(m) ** 2 / ((ep + threshold - e_r) ** 2 + width ** 2)

    cap = 1e4 - threshold
    c = e_r - threshold
    pts = {0.0, cap}
    for p in (c - 5 * g_r, c - g_r, c, c + g_r, c + 5 * g_r, c + 200 * g_r):
        if 0 < p < cap:
            pts.add(p)
    p = c + 200 * g_r
    while p * 2 < cap:
        p *= 2
        pts.add(p)
    pts = sorted(pts)
    # Substitute ep = t^2 to remove the threshold square root.
    return sum(quad(lambda t: 2 * t * density(t * t), np.sqrt(lo), np.sqrt(hi),
                    limit=500, epsabs=1e-14, epsrel=1e-12)[0]
               for lo, hi in zip(pts[:-1], pts[1:]))


def c(z):
    z = mp.mpc(z)
    return [float(mp.re(z)), float(mp.im(z))]


def main():
    out = {}

    eb = mp.findroot(lambda e: f_plus(branch(e, 1)), -0.4)
    er = mp.findroot(lambda e: f_plus(branch(e, -1)), mp.mpc(12.7, -12.9))
    _, _, nb, _ = single_state(eb, 1)
    _, q0, nr, br = single_state(er, -1)
    e_r, g_r = float(mp.re(er)), float(-2 * mp.im(er))
    qc, bc = complex(q0), complex(br)
    g1 = gamma(lambda x: [bc * np.sin(qc * x)], [V0], e_r, g_r, 0.0, g_r / 2)
    out["single"] = {"bound_E": float(mp.re(eb)), "bound_N": float(mp.re(nb)),
                     "res_E": c(er), "res_N": c(nr), "Gamma": g1, "Gamma_R": g_r}

    v = [[-4, -1], [-1, -4]]
    eb2 = mp.findroot(lambda e: mp.det(jost_matrix(ks(e, (1, 1)), v)[0]), -0.48)
    er2 = mp.findroot(lambda e: mp.det(jost_matrix(ks(e, (-1, 1)), v)[0]),
                      mp.mpc(3.66, -0.058))
    _, nb2, _, _ = two_state(eb2, (1, 1), v, mp.mpf("0.1"))
    _, nr2, modes, q = two_state(er2, (-1, 1), v, mp.mpf("0.029"))
    mc = [[complex(modes[i, j]) for j in range(2)] for i in range(2)]
    qc2 = [complex(q[0]), complex(q[1])]

    def u2(x):
        s = [np.sin(qc2[0] * x), np.sin(qc2[1] * x)]
        return [mc[i][0] * s[0] + mc[i][1] * s[1] for i in range(2)]

    e_r2, g_r2 = float(mp.re(er2)), float(-2 * mp.im(er2))
    two = {"bound_E": float(mp.re(eb2)), "bound_N": [float(mp.re(x)) for x in nb2],
           "res_E": c(er2), "res_N": [c(x) for x in nr2], "Gamma_R": g_r2}
    for tag, wdt in (("half", g_r2 / 2), ("quarter", g_r2 / 4)):
        two["Gamma_" + tag] = [gamma(u2, v[al], e_r2, g_r2, TH[al], wdt) for al in range(2)]
    out["two"] = two

    out["decoupled_E"] = [float(mp.re(eb)), float(TH[1] + mp.re(eb))]
    out["k_at_bound_guess"] = [c(x) for x in ks(mp.mpf("-0.486193"), (1, 1))]
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
