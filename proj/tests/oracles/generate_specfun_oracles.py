#!/usr/bin/env python3
"""Reference values for the special-function tests.

Evaluated with mpmath at 60 significant digits and pasted into
tests/oracle_values.hpp. Re-run after changing the point set.
"""
from mpmath import mp, mpc, mpf, gamma, hyp2f1, rgamma, exp, log, power

mp.dps = 60


def c(v):
    v = mpc(v)
    return "{%s, %s}" % (mp.nstr(v.real, 20, min_fixed=-1, max_fixed=-1),
                         mp.nstr(v.imag, 20, min_fixed=-1, max_fixed=-1))


def hyp(a, b, cc, z, reg=False):
    f = hyp2f1(a, b, cc, z)
    return f * rgamma(cc) if reg else f


print("// gamma")
for z in [mpc(2, 3), mpc(0.3, -1.7), mpc(-2.5, 0.4), mpc(5.5, 0), mpc(-0.7, -2.2), mpc(0.01, 0.02)]:
    print("{%s, %s}," % (c(z), c(gamma(z))))

print("// hyp2f1 points (a, b, c, z)")
pts = [
    (mpc(0.3, 0.7), mpc(1.1, -0.2), mpc(0.9, 0.4), mpf(-0.6)),
    (mpc(0.5, 1.2), mpc(-0.3, 0.8), mpc(1.7, -0.5), mpf(-0.95)),
    (mpc(1.25, -0.6), mpc(0.75, 0.6), mpc(2.1, 0.3), mpf(-0.1353352832366127)),
    (mpc(0.2, 0.9), mpc(0.4, -0.9), mpc(1.0, 1.8), mpf(0.75)),
    (mpc(-0.5, 1.1), mpc(1.5, 1.1), mpc(1.0, 2.5), mpf(0.98)),
    (mpc(0.5, -0.4), mpc(0.5, 0.4), mpc(1.3, 0.0), mpf(0.6)),
    (mpc(1.5, 0.2), mpc(-0.5, 0.7), mpc(0.4, -1.1), mpf(0.999)),
    (mpc(0.1, 2.0), mpc(0.9, -2.0), mpc(1.0, 0.4), mpf(-3.0)),
    (mpc(0.8, 0.3), mpc(0.6, -1.4), mpc(2.6, 0.9), mpf(-400.0)),
]
for a, b, cc, z in pts:
    print("{%s, %s, %s, %s, %s}," % (c(a), c(b), c(cc), mp.nstr(z, 20), c(hyp(a, b, cc, z))))

print("// near one, given as complement w (a, b, c, w)")
for a, b, cc, w in [
    (mpc(0.5, 1.0), mpc(0.5, -0.3), mpc(1.02, 0.0), mpf("6.914400106940203e-13")),
    (mpc(0.25, -1.5), mpc(1.25, 0.5), mpc(1.0, -2.0), mpf("1e-9")),
]:
    print("{%s, %s, %s, %s, %s}," % (c(a), c(b), c(cc), mp.nstr(w, 20), c(hyp(a, b, cc, 1 - w))))

print("// regularized (a, b, c, z)")
for a, b, cc, z in [
    (mpf(0.5), mpf(1.5), mpf(-1), mpf(0.3)),
    (mpc(0.3, 0.2), mpc(1.1, -0.5), mpc(-2, 0), mpf(-0.4)),
    (mpc(0.3, 0.2), mpc(1.1, -0.5), mpc(-2, 0), mpf(0.8)),
    (mpc(1.5, 0.2), mpc(0.5, 1.2), mpc(0.0, 0.0), mpf(0.6)),
]:
    if mp.im(cc) == 0 and mp.re(cc) <= 0 and mp.re(cc) == int(mp.re(cc)):
        # pole of Gamma(c): F~(a,b;-n;z) = (a)_{n+1} (b)_{n+1} z^{n+1}/(n+1)! F(a+n+1,b+n+1;n+2;z)
        n = -int(mp.re(cc))
        v = (mp.rf(a, n + 1) * mp.rf(b, n + 1) * power(z, n + 1) / mp.factorial(n + 1)
             * hyp2f1(a + n + 1, b + n + 1, n + 2, z))
    else:
        v = hyp2f1(a, b, cc, z) * rgamma(cc)
    print("{%s, %s, %s, %s, %s}," % (c(a), c(b), c(cc), mp.nstr(z, 20), c(v)))

print("// complex power")
base = -exp(-4)
e = mpc(0.25, 0.1)
print(c(exp(e * (log(-base) + mpc(0, 1) * mp.pi))))

print("// h-table entries at E=2.5, a=2, L=2, V0=5")
E, a, L, V0 = mpf("2.5"), mpf(2), mpf(2), mpf(5)
k = mp.sqrt(E**2 - 1)
nu = 1j * k / a
mu = mp.sqrt(mpc(1 - (E - V0)**2)) / a
lam = mp.sqrt(mpc(a**2 - 4 * V0**2)) / (2 * a)
l1 = -mpf(1) / 2 + lam
zl = -exp(-a * L)
zr = 1 / (1 + exp(-a * L))
h = {
    1: hyp2f1(-l1 + mu - nu, -l1 + mu + nu, 1 + 2 * mu, zl),
    3: hyp2f1(-l1 - mu - nu, -l1 - mu + nu, 1 - 2 * mu, zl),
    5: hyp2f1(0.5 - lam - mu - nu, 0.5 + lam - mu - nu, 1 - 2 * nu, zr),
    6: hyp2f1(1.5 - lam - mu - nu, 1.5 + lam - mu - nu, 2 * (1 - nu), zr),
    7: hyp2f1(1.5 - lam - mu - nu, 0.5 + lam - mu - nu, 1 - 2 * nu, zr) * rgamma(1 - 2 * nu),
}
for i in sorted(h):
    print("{%d, %s}," % (i, c(h[i])))
