#!/usr/bin/env python3
"""High-precision reference values for the test suite.

Evaluates the closed-form depth coefficients and a few derived limits with
mpmath at 50 digits, independently of the C++ implementation.  Values printed
here are frozen as literals in tests/; rerun this script to regenerate them.
"""

from mpmath import mp, mpf, sqrt, tanh, findroot

mp.dps = 50


def c_h(h):
    return sqrt(tanh(h))


def e_12(h):
    c = c_h(h)
    return c + (1 - c**4) * h / c


def e_22(h):
    c = c_h(h)
    return ((1 - c**4) * (1 + 3 * c**4) * h**2 + 2 * c**2 * (c**4 - 1) * h + c**4) / c**3


def e_11(h):
    c = c_h(h)
    return (9 * c**8 - 10 * c**4 + 9) / (8 * c**7)


def f_11(h):
    c = c_h(h)
    return (1 - c**4) / (2 * c ** mpf("1.5"))


def D_h(h):
    return h - e_12(h) ** 2 / 4


def e_wb(h):
    c = c_h(h)
    return (1 / c) * (
        (9 * c**8 - 10 * c**4 + 9) / (8 * c**6)
        - (1 / D_h(h)) * (1 + (1 - c**4) / 2 + mpf(3) / 4 * (1 - c**4) ** 2 / c**2 * h)
    )


def tilde_e11(h):
    c = c_h(h)
    return -(1 / D_h(h)) * (1 / c + h * f_11(h) ** 2 + e_12(h) * f_11(h) / sqrt(c))


def bisect(f, lo, hi, iters=200):
    flo = f(lo)
    assert flo * f(hi) < 0
    for _ in range(iters):
        mid = (lo + hi) / 2
        if flo * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
            flo = f(lo)
    return (lo + hi) / 2


def show(label, value):
    print(f"{label:34s} {mp.nstr(value, 25)}")


h_wb = bisect(e_wb, mpf(1), mpf(2))
show("h_wb (bisection [1,2])", h_wb)
show("h_wb (bisection [1.3,1.4])", bisect(e_wb, mpf("1.3"), mpf("1.4")))
show("h_wb (findroot)", findroot(e_wb, mpf("1.36")))

show("c_h(1)", c_h(1))
show("e_wb(1)", e_wb(1))
show("e_wb(2)", e_wb(2))
show("e_11(2)", e_11(2))
show("tilde_e11(2)", tilde_e11(2))
show("e_11+tilde_e11-e_wb at h=2", e_11(2) + tilde_e11(2) - e_wb(2))
show("e_12(2)", e_12(2))
show("e_22(2)", e_22(2))
show("D_h(2)", D_h(2))
show("f_11(2)", f_11(2))
show("breve_c(2) = 2c - e_12", 2 * c_h(2) - e_12(2))
show("e_h(2) = sqrt(8 e_wb/e_22)", sqrt(8 * e_wb(2) / e_22(2)))
show("e_22(20) - 1", e_22(20) - 1)
show("e_12(20) - 1", e_12(20) - 1)

# second-order Stokes coefficients
for h in (1, 25):
    c = c_h(h)
    eta2_0 = (c**4 - 1) / (4 * c**2)
    eta2_2 = (3 - c**4) / (4 * c**6)
    psi2_2 = (3 + c**8) / (8 * c**7)
    c2 = (-2 * c**12 + 13 * c**8 - 12 * c**4 + 9) / (16 * c**7)
    show(f"eta2_0({h})", eta2_0)
    show(f"eta2_2({h})", eta2_2)
    show(f"psi2_2({h})", psi2_2)
    show(f"c2({h})", c2)

# first-order Dirichlet-Neumann coefficient of sin(2x) and the second-order
# projection coefficient of sin(x)
for h in (1, 2):
    c = c_h(h)
    show(f"g1_sin2x({h})", (1 - c**4) / (c * (1 + c**4)))
    show(f"g2_sin1x({h})", c * (3 * c**4 - 1) / (4 * (1 + c**4)))

# conformal shift and coefficient-function expansion values
for h in (1, 2):
    c = c_h(h)
    show(f"p_frak2({h})", (1 + c**4) * (c**4 + 3) / (8 * c**8))
    show(f"f_eps/eps^2({h})", (c**4 - 3) / (4 * c**2))
    show(f"p1_1({h})", -2 / c)
    show(f"p2_0({h})", (9 + 12 * c**4 + 5 * c**8 - 2 * c**12) / (16 * c**7))
    show(f"p2_2({h})", -(3 + c**4) / (2 * c**7))
    show(f"a1_1({h})", -(c**2 + 1 / c**2))
    show(f"a2_0({h})", mpf(3) / 2 + 1 / (2 * c**4))
    show(f"a2_2({h})", (-14 * c**4 + 9 * c**8 - 3) / (4 * c**8))

# basis-expansion constants and the e_22 = 2(b - 4 zeta) identity
for h in (1, 2):
    c = c_h(h)
    gamma = 1 + h * (1 - c**4) / c**2
    zeta = c * gamma**2 / 8
    b = gamma * c + h * (1 - c**4) * (gamma - 2 * (1 - c**2 * h)) / c
    show(f"gamma_h({h})", gamma)
    show(f"alpha_h({h})", (3 + c**4) / (2 * c ** mpf("5.5")))
    show(f"beta_h({h})", (1 + c**4) * (3 - c**4) / (4 * c ** mpf("6.5")))
    show(f"delta_h({h})", (3 + c**4) / (4 * c ** mpf("2.5")))
    show(f"zeta_h({h})", zeta)
    show(f"b_bold_h({h})", b)
    show(f"2(b-4zeta)-e_22 at h={h}", 2 * (b - 4 * zeta) - e_22(h))

# leading coefficient of the homological-solution entry x21
for h in (1, 2):
    c = c_h(h)
    show(f"x21_coeff({h})", -(e_12(h) * f_11(h) + 2 / sqrt(c)) / (2 * D_h(h)))

# unstable band and growth maximum at h=2, eps=0.01
eps = mpf("0.01")
mu_bar = sqrt(8 * e_wb(2) / e_22(2)) * eps
show("mu_bar(2,0.01)", mu_bar)
show("mu_max = mu_bar/sqrt(2)", mu_bar / sqrt(2))
show("max_re = e_wb(2) eps^2/2", e_wb(2) * eps**2 / 2)
