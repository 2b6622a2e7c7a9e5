"""Independent sympy transcriptions of the weight polynomials and the two 4-variable T formulas."""
import sympy as sp

z, x1, x2, x3, x4 = sp.symbols("z x1 x2 x3 x4")


def G(x, y):
    return (z + 2) * x * y * (x + y) - z * (x**2 + y**2) - 2 * (z**2 + 3 * z + 1) * x * y + z * (2 * z + 1) * (x + y)


def Q(x, y):
    return y * (y - 2 * z - 1) * ((z + 2) * y - 3 * z) - x * ((z + 2) * y - z) * (2 * z + 1 - 3 * y)


def R(x, y):
    return (
        3 * (z + 2) ** 2 * x**2 * y**2
        + z * (z + 2) * (2 * z + 1) * (x**2 + y**2)
        - 2 * (z**2 + 4 * z + 1) * ((z + 2) * x * y + z * (2 * z + 1)) * (x + y)
        + 4 * (z**4 + 4 * z**3 + 8 * z**2 + 4 * z + 1) * x * y
        + 3 * z**2 * (2 * z + 1) ** 2
    )


XI = (2 * z + 1, z / (z + 2), z * (2 * z + 1) / (z + 2), sp.Integer(1))

T_20 = (
    (x4 - x1) * (x3 - x2) * G(x1, x4) * G(x2, x3) * Q(x1, x3) * Q(x2, x4)
    - (x3 - x1) * (x4 - x2) * G(x1, x3) * G(x2, x4) * Q(x1, x4) * Q(x2, x3)
) / ((x2 - x1) * (x4 - x3))


def T_11(r_sign=1):
    return r_sign * (x4 - x1) * (x3 - x2) * G(x1, x4) * G(x2, x3) * R(x3, x4) - G(x1, x2) * G(x3, x4) * Q(x1, x4) * Q(
        x2, x3
    )


def ratzeta_to_sympy(value):
    num, den = value.coeff_lists()
    p = sum(sp.Integer(int(c)) * z**i for i, c in enumerate(num))
    q = sum(sp.Integer(int(c)) * z**i for i, c in enumerate(den))
    return p / q
