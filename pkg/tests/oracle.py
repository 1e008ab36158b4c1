"""Stand-alone evaluation of the three amplification coefficients.

Each function is one expression over plain floats with its own copy of the
constants.  Nothing here imports the package under test.
"""

from math import pi, sqrt

E_CHARGE = 4.803204712570263e-10  # statC
M_ELECTRON = 9.1093837015e-28  # g
C_LIGHT = 2.99792458e10  # cm/s
HBAR = 1.054571817e-27  # erg s


def rabi(d12, field):
    return 2 * d12 * field / HBAR


def alpha_ordinary(n, a, b, delta, rabi_f, wp, ws, wi, m_el):
    return (4 * pi * n * E_CHARGE**2 / (M_ELECTRON * C_LIGHT)) * abs(abs(a) ** 2 - abs(b) ** 2) * (
        abs(delta) * rabi_f / sqrt(delta**2 + rabi_f**2)
    ) * sqrt(m_el / ((2 * wp - ws) * ws * (2 * wp - wi) * wi))


def alpha_blue(n, a, b, delta, rabi_f, wp, ws, wi, m_el):
    gen = sqrt(delta**2 + rabi_f**2)
    return (pi * n * E_CHARGE**2 / (M_ELECTRON * C_LIGHT * wp)) * abs(a.conjugate() * b) * (
        rabi_f**2 / (delta**2 + rabi_f**2)
    ) * sqrt(abs(m_el * (gen / (2 * wp - ws) + delta / ws) * (gen / (2 * wp - wi) + delta / wi)))


def alpha_red(n, a, b, delta, rabi_f, wp, ws, wi, m_el, use_generalized=False):
    shift = sqrt(delta**2 + rabi_f**2) if use_generalized else rabi_f
    return (pi * n * E_CHARGE**2 / (M_ELECTRON * C_LIGHT * wp)) * abs(a.conjugate() * b) * (
        rabi_f**2 / (delta**2 + rabi_f**2)
    ) * (abs(delta + shift / 2) / sqrt((2 * wp - ws) * (2 * wp - wi))) * sqrt(m_el)


def small_argument_matrix_element(ws, wi, rho_bar):
    return (ws / C_LIGHT * rho_bar) * (wi / C_LIGHT * rho_bar)


def field_from_intensity(intensity_w_cm2):
    return sqrt(8 * pi * intensity_w_cm2 * 1e7 / C_LIGHT)


def omega_from_wavelength(lam):
    return 2 * pi * C_LIGHT / lam
