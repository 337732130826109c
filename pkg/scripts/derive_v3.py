# scripts/derive_v3.py
"""
Independent check of the regular ideal tetrahedron volume.

    v3 = 3 * Lobachevsky(pi/3),   Lobachevsky(x) = -int_0^x ln|2 sin t| dt

Usage:
    python scripts/derive_v3.py
"""
import math
import sys

from scipy.integrate import quad


def lobachevsky(x: float) -> float:
    value, _ = quad(lambda t: math.log(abs(2 * math.sin(t))), 0.0, x, limit=200)
    return -value


def derive_v3() -> float:
    return 3 * lobachevsky(math.pi / 3)


def main() -> int:
    from wirtinger.services.bounds import V3

    derived = derive_v3()
    print(f"derived v3 = {derived:.16f}")
    print(f"frozen  v3 = {V3:.16f}")
    print(f"|diff|     = {abs(derived - V3):.3e}")
    return 0 if abs(derived - V3) < 1e-9 else 1


if __name__ == "__main__":
    sys.exit(main())
