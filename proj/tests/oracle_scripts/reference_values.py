"""High-precision reference values frozen into the C++ unit tests.

Run: python3 reference_values.py
"""
import mpmath as mp

mp.mp.dps = 40
pi = mp.pi


def h(u):
    return u * mp.acosh(u) - mp.sqrt(u * u - 1)


def phase_volume(lam, c1, c2, b):
    # full-plane volume via the u = cosh(2 pi b k) substitution (not the k-route used in C++)
    lam = mp.mpf(lam)
    top = (lam - 2 * c2) / (2 * c1)
    if top <= 1:
        return mp.mpf(0)
    f = lambda v: 2 * c2 * h((lam - 2 * c1 * v) / (2 * c2)) / mp.sqrt(v * v - 1)
    quadrant = mp.quad(f, [1, (1 + top) / 2, top]) / (2 * pi * b) ** 2
    return 4 * quadrant


def strip_full(B):
    B = mp.mpf(B)
    smax = mp.acosh(B - 1)
    return mp.quad(lambda s: mp.acosh(B - mp.cosh(s)), [0, smax / 2, smax])


def strip(A, B):
    if A <= 2:
        return strip_full(B)
    return strip_full(B) - strip_full(A)


def proof_chain_upper(lam, b, d):
    lam = mp.mpf(lam); m = mp.log(lam - 4 * d) / mp.log(2); p = 1 / (pi**2 * b**2)
    return (2 * p * mp.log(lam / d) ** 2
            + 4 * p * ((lam - 1) * mp.log((lam - 1) / d) ** 2 - 2 * (lam - 1) * mp.log((lam - 1) / d))
            - 4 * p * (lam - m - 1) * mp.log((lam - m - 1) / d) ** 2
            + 8 * p * ((lam - m - 1) * mp.log((lam - m - 1) / d) + m))


def proof_chain_lower(lam, b, dp):
    lam = mp.mpf(lam); m = mp.log(lam - 4 * dp) / mp.log(2); p = 1 / (pi**2 * b**2)
    q = lambda x: x / (4 * dp)
    return (p * mp.log(q(lam - 1)) ** 2
            + p * ((lam - 1) * mp.log(q(lam - 1)) ** 2 - 2 * (lam - 1) * mp.log(q(lam - 1)))
            - p * (lam - m - 1) * mp.log(q(lam - m - 1)) ** 2
            + 2 * p * ((lam - m - 1) * mp.log(q(lam - m - 1)) + m))


def show(name, v):
    print(f"{name:40s} {mp.nstr(v, 20)}")


d = mp.e ** (-pi / 2)
show("exp(-1)", mp.e ** -1)
show("exp(-pi^2/4)", mp.e ** (-pi**2 / 4))
show("exp(-pi/2)", d)
show("cosh(1)+1", mp.cosh(1) + 1)
show("acosh(2)", mp.acosh(2))
show("e-2", mp.e - 2)
show("(2 ln 2)^2", (2 * mp.log(2)) ** 2)
show("ln^2 2", mp.log(2) ** 2)
show("ln^2 8", mp.log(8) ** 2)
show("theorem1 bracket lam=2", 3 * mp.log(2) ** 2 - 4 * mp.log(2) + 1)
show("theorem1 lam=2 b=1", (3 * mp.log(2) ** 2 - 4 * mp.log(2) + 1) / pi**2)
show("e/pi^2", mp.e / pi**2)
show("1/pi^2", 1 / pi**2)
show("strip(0,4)=W(4)", strip_full(4))
show("strip(2,4)", strip(2, 4))
show("strip(3,4)", strip(3, 4))
show("strip(4,10)", strip(4, 10))
show("strip(2,1e4)", strip_full(1e4))
for lam in [3, 10, 100, 1e4, 1e6]:
    show(f"vol lam={lam} c=0.5,0.5 b=1/(2pi)" if lam == 3 else f"vol lam={lam} c=d b=1", phase_volume(lam, 0.5, 0.5, 1 / (2 * pi)) if lam == 3 else phase_volume(lam, d, d, 1))
show("vol lam=50 c1=0.3 c2=0.7 b=0.8", phase_volume(50, mp.mpf('0.3'), mp.mpf('0.7'), mp.mpf('0.8')))
show("I2 lam=1e4 (1/d,1/d) b=1", phase_volume(1e4, 1 / d, 1 / d, 1))
show("simple bound lam=1e3", (1 / pi**2) * mp.log((1000 - 2 * d) / d) * 1000 * mp.log(1000 / d))
show("proof_chain_upper 1e4", proof_chain_upper(1e4, 1, d))
show("proof_chain_lower 1e4", proof_chain_lower(1e4, 1, 1 / d))
lam = mp.mpf(1e6)
show("I1 asym 1e6 ratio", ((mp.log(lam) + pi / 2 - 1) ** 2 + 1 - pi**2 / 6) / mp.log(lam) ** 2)
show("I1 exact 1e6 ratio", phase_volume(1e6, d, d, 1) / (lam * mp.log(lam) ** 2 / pi**2))
