"""The constants k1, k2 of the restricted maps on C(a,b)."""

from fractions import Fraction

from quivermaps.schema import KConstants, MapId


def k_constants(map_id: MapId, a, b) -> KConstants:
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValueError(f"k constants need positive (a, b), got ({a}, {b})")
    if map_id is MapId.F0:
        k1 = (1 + a * b) ** 2 * (a + b) ** 4 / (a**3 * b**5)
        k2 = (1 + a * b) ** 4 * (a + b) ** 6 / (a**5 * b**7)
    else:
        k1 = (a + 1) * (b + 1) * (a + b) / (a * b)
        k2 = (a + 1) ** 3 * (b + 1) ** 2 * (a + b) / a**2
    return KConstants(k1=k1, k2=k2, map_id=map_id, a=a, b=b)
