"""Sign-exact floating-point predicates.

Fast float evaluation with a forward error bound; only near-degenerate cases
fall back to exact rational arithmetic (floats are rationals, so Fraction
gives the true sign).
"""

from __future__ import annotations

from fractions import Fraction

# Forward error bounds after Shewchuk ((3+16e)e resp. (10+96e)e with
# e = 2^-53), loosened for safety; too-large guards only cost an exact
# recomputation, too-small ones would trust a wrong sign.
_ORIENT_GUARD = 1e-15
_INCIRCLE_GUARD = 5e-15


def orient_sign(ax: float, ay: float, bx: float, by: float,
                cx: float, cy: float) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 if a,b,c turn CCW."""
    p = (bx - ax) * (cy - ay)
    q = (by - ay) * (cx - ax)
    det = p - q
    bound = _ORIENT_GUARD * (abs(p) + abs(q))
    if det > bound:
        return 1
    if det < -bound:
        return -1
    return _orient_exact(ax, ay, bx, by, cx, cy)


def _orient_exact(ax, ay, bx, by, cx, cy) -> int:
    det = (Fraction(bx) - Fraction(ax)) * (Fraction(cy) - Fraction(ay)) \
        - (Fraction(by) - Fraction(ay)) * (Fraction(cx) - Fraction(ax))
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def incircle_sign(ax: float, ay: float, bx: float, by: float,
                  cx: float, cy: float, dx: float, dy: float) -> int:
    """Sign of the incircle determinant: +1 if d lies strictly inside the
    circumcircle of the CCW triangle a,b,c, -1 if strictly outside."""
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    ad2 = adx * adx + ady * ady
    bd2 = bdx * bdx + bdy * bdy
    cd2 = cdx * cdx + cdy * cdy

    bxc = bdx * cdy - bdy * cdx
    cxa = cdx * ady - cdy * adx
    axb = adx * bdy - ady * bdx
    det = ad2 * bxc + bd2 * cxa + cd2 * axb
    mag = ad2 * (abs(bdx * cdy) + abs(bdy * cdx)) \
        + bd2 * (abs(cdx * ady) + abs(cdy * adx)) \
        + cd2 * (abs(adx * bdy) + abs(ady * bdx))
    bound = _INCIRCLE_GUARD * mag
    if det > bound:
        return 1
    if det < -bound:
        return -1
    return _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy)


def _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    adx = Fraction(ax) - Fraction(dx)
    ady = Fraction(ay) - Fraction(dy)
    bdx = Fraction(bx) - Fraction(dx)
    bdy = Fraction(by) - Fraction(dy)
    cdx = Fraction(cx) - Fraction(dx)
    cdy = Fraction(cy) - Fraction(dy)
    det = (adx * adx + ady * ady) * (bdx * cdy - bdy * cdx) \
        + (bdx * bdx + bdy * bdy) * (cdx * ady - cdy * adx) \
        + (cdx * cdx + cdy * cdy) * (adx * bdy - ady * bdx)
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0
