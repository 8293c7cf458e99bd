"""Shared test constants: independently computed reference digits.

The decimal strings below were produced with mpmath at 115 digits and
frozen here, so interval and algebraic enclosures are checked against a
source that shares no code with the library's gmpy2/MPFR paths.
"""

from fractions import Fraction

import pytest

E_110 = "2.7182818284590452353602874713526624977572470936999595749669676277240766303535475945713821785251664274274663919"
PI_110 = "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679821480865"
SQRT2_60 = "1.41421356237309504880168872420969807856967187537694807317668"
LOG2_60 = "0.693147180559945309417232121458176568075500134360255254120680"
E_I_RE_60 = "0.540302305868139717400936607442976603732310420617922227670097"
E_I_IM_60 = "0.841470984807896506652502321630298999622563060798371065672752"
LOG_101_100_30 = "0.00995033085316808284821535754426"
SMALL_LOG23_30 = "0.0135510333783554178155325353650"


def frac(digits: str) -> Fraction:
    return Fraction(digits)


@pytest.fixture
def fresh_name(request):
    """A collision-free abstract symbol name per test."""
    counter = {"n": 0}

    def make(prefix="T"):
        counter["n"] += 1
        return f"{prefix}_{request.node.name[:40]}_{counter['n']}"

    return make


def contains_digits(interval, digits: str, slack_digits: int = 2) -> bool:
    """Interval must overlap a small window around the decimal reference."""
    v = Fraction(digits)
    # the reference is correct to its printed length; allow one ulp there
    ulp = Fraction(1, 10 ** (len(digits.split(".")[1]) - slack_digits))
    return interval.lo_fraction() <= v + ulp and interval.hi_fraction() >= v - ulp
