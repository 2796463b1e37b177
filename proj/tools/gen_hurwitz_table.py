#!/usr/bin/env python3
"""Derives the multiplication table of the Hurwitz quaternions modulo 2.

Works in exact rational coordinates over (1, i, j, k) with the Hamilton
product, expresses each product of the integral basis (1, i, j, w),
w = (1+i+j+k)/2, back in that basis, and reduces the (integer) coordinates
mod 2. Writes core/data/hurwitz_mod2_table.txt, one line per basis product:

    b_i * b_j = <bit-quadruple>

where the quadruple lists the mod-2 coefficients of (1, i, j, w) in order.
Prints the SHA-256 of the file, which is committed alongside as
hurwitz_mod2_table.sha256.
"""

import hashlib
import pathlib
from fractions import Fraction


def qmul(x, y):
    """Hamilton product on coordinates over (1, i, j, k)."""
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def to_hurwitz_basis(q):
    """Coordinates over (1, i, j, w) given coordinates over (1, i, j, k).

    k = 2w - 1 - i - j, so (a, b, c, d) = (a-d)*1 + (b-d)*i + (c-d)*j + 2d*w.
    """
    a, b, c, d = q
    coords = (a - d, b - d, c - d, 2 * d)
    for v in coords:
        if v.denominator != 1:
            raise ValueError(f"non-integral Hurwitz coordinate {v}")
    return tuple(int(v) for v in coords)


def main():
    half = Fraction(1, 2)
    basis = {
        "1": (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
        "i": (Fraction(0), Fraction(1), Fraction(0), Fraction(0)),
        "j": (Fraction(0), Fraction(0), Fraction(1), Fraction(0)),
        "w": (half, half, half, half),
    }
    names = ["1", "i", "j", "w"]

    lines = []
    for x in names:
        for y in names:
            coords = to_hurwitz_basis(qmul(basis[x], basis[y]))
            bits = "".join(str(c % 2) for c in coords)
            lines.append(f"{x} * {y} = {bits}")
    content = "\n".join(lines) + "\n"

    out = pathlib.Path(__file__).resolve().parent.parent / "core" / "data"
    out.mkdir(parents=True, exist_ok=True)
    path = out / "hurwitz_mod2_table.txt"
    path.write_text(content)
    digest = hashlib.sha256(content.encode()).hexdigest()
    print(f"wrote {path}")
    print(f"sha256 {digest}")


if __name__ == "__main__":
    main()
