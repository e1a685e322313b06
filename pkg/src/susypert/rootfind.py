# Copyright (c) 2026, the susypert developers.
# All rights reserved.

# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
# ARE DISCLAIMED. IN NO EVENT SHALL THE SUSYPERT DEVELOPERS BE LIABLE FOR ANY
# DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES
# (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
# LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND
# ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
# (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS
# SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

"""
Certified isolation and refinement of positive real roots.

Roots are counted with Sturm chains and refined by bisection; every sign is
evaluated exactly. Bisection starts from a power-of-two upper bound, so all
midpoints are dyadic and dyadic roots (a = 1, 2, 4, ...) are hit exactly.
"""

import logging
from fractions import Fraction
from dataclasses import dataclass

import mpmath

from susypert.ratpoly import Poly
from susypert.ratpoly import SusyPertError
from susypert.ratpoly import ZeroPolynomial
from susypert.ratpoly import to_rational
from susypert.ratpoly import poly_eval
from susypert.ratpoly import poly_divmod
from susypert.ratpoly import poly_primitive
from susypert.ratpoly import poly_derivative

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 12
COMPLEX_DPS = 60
MAX_ROOT_STEPS = 3200

ROOT_LARGEST = 'largest'
ROOT_REAL_PART = 'real_part'
ROOT_RULES = (ROOT_LARGEST, ROOT_REAL_PART)


class EndpointRoot(SusyPertError):
    """ Raised when a counting interval has a root exactly at one of its ends. """


class NoPositiveRoot(SusyPertError):
    """ Raised when a polynomial has no positive real root. """


@dataclass(frozen=True)
class RootBracket:
    """
    Interval (lo, hi) holding exactly one distinct root of a polynomial.

    The signs at the ends differ for roots of odd multiplicity; a root of even
    multiplicity gives equal signs and is refined by Sturm counts instead.
    """

    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("Empty bracket: {} >= {}".format(self.lo, self.hi))

    @property
    def width(self):
        return self.hi - self.lo


@dataclass(frozen=True)
class RefinedRoot:
    """
    Root approximation with a certified error bound.

    The root lies in [value - half_width, value + half_width] and
    half_width <= 10^-requested_digits. half_width is 0 for roots found exactly.
    """

    value: Fraction
    half_width: Fraction
    requested_digits: int

    @property
    def lo(self):
        return self.value - self.half_width

    @property
    def hi(self):
        return self.value + self.half_width

    @property
    def is_exact(self):
        return self.half_width == 0


def sign(value):
    return (value > 0) - (value < 0)


def _deflate(p):
    """ Divides out the factor a^k of a root at zero; signs for a > 0 are unchanged. """

    if p.is_zero:
        raise ZeroPolynomial("The zero polynomial has no isolated roots.")

    shift = 0
    while p[shift] == 0:
        shift += 1

    return Poly(p.coeffs[shift:], var=p.var) if shift else p


def sturm_chain(p):
    """
    Sturm chain p, p', -rem(p, p'), ... of a polynomial.

    Every member is rescaled by a positive factor to coprime integer
    coefficients, which keeps the signs and the numbers small.

    Parameters
    ----------
    p : Poly
        Nonzero polynomial.

    Returns
    -------
    list of Poly
        The chain; its last member is gcd(p, p') up to a positive factor.
    """

    if p.is_zero:
        raise ZeroPolynomial("The zero polynomial has no Sturm chain.")

    chain = [poly_primitive(p)]
    derivative = poly_derivative(p)
    if not derivative.is_zero:
        chain.append(poly_primitive(derivative))

    while chain[-1].degree > 0:
        _, remainder = poly_divmod(chain[-2], chain[-1])
        if remainder.is_zero:
            break
        chain.append(poly_primitive(-remainder))

    return chain


def sign_variations(chain, x):
    """ Number of sign changes of the chain at x, zeros skipped. """

    signs = [s for s in (sign(poly_eval(q, x)) for q in chain) if s != 0]
    return sum(1 for left, right in zip(signs, signs[1:]) if left != right)


def sturm_count(p, lo, hi, chain=None):
    """
    Number of distinct real roots of p in (lo, hi].

    Parameters
    ----------
    p : Poly
        Nonzero polynomial; it need not be squarefree.
    lo, hi : Fraction
        Interval ends, lo < hi.
    chain : list of Poly, optional
        Precomputed Sturm chain of p.

    Returns
    -------
    int
        Count of distinct roots.

    Raises
    ------
    EndpointRoot
        If p vanishes at lo or at hi.
    """

    lo, hi = to_rational(lo), to_rational(hi)
    if not lo < hi:
        raise ValueError("Empty interval: {} >= {}".format(lo, hi))
    for end in (lo, hi):
        if poly_eval(p, end) == 0:
            raise EndpointRoot("The polynomial vanishes at the interval end {}.".format(end))

    chain = sturm_chain(p) if chain is None else chain

    return sign_variations(chain, lo) - sign_variations(chain, hi)


def cauchy_bound(p):
    """
    Cauchy bound 1 + max_k |c_k| / |c_lead|; every root is smaller in modulus.
    """

    if p.degree < 1:
        return Fraction(1)

    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def _power_of_two_above(value):
    bound = Fraction(1)
    while bound < value:
        bound *= 2
    return bound


def _exact_root_bracket(p, root, lo, hi, chain):
    """ Bracket centred on a known exact root, small enough to hold no other root. """

    delta = min(root - lo, hi - root) / 2
    while True:
        left, right = root - delta, root + delta
        if poly_eval(p, left) != 0 and poly_eval(p, right) != 0 \
                and sturm_count(p, left, right, chain) == 1:
            return RootBracket(left, right, sign(poly_eval(p, left)), sign(poly_eval(p, right)))
        delta /= 2


def isolate_positive_roots(p):
    """
    Disjoint brackets for all distinct positive real roots of p.

    Parameters
    ----------
    p : Poly
        Nonzero polynomial. A root at a = 0 is divided out exactly.

    Returns
    -------
    list of RootBracket
        Brackets in increasing order; empty if there is no positive root.
    """

    p = _deflate(p)
    if p.degree < 1:
        return []

    chain = sturm_chain(p)
    upper = _power_of_two_above(cauchy_bound(p))
    pending = [(Fraction(0), upper)]
    brackets = []

    while pending:
        lo, hi = pending.pop()
        count = sturm_count(p, lo, hi, chain)
        if count == 0:
            continue
        if count == 1:
            brackets.append(RootBracket(lo, hi, sign(poly_eval(p, lo)), sign(poly_eval(p, hi))))
            continue

        mid = (lo + hi) / 2
        if poly_eval(p, mid) == 0:
            exact = _exact_root_bracket(p, mid, lo, hi, chain)
            brackets.append(exact)
            pending.extend([(lo, exact.lo), (exact.hi, hi)])
        else:
            pending.extend([(lo, mid), (mid, hi)])

    brackets.sort(key=lambda b: b.lo)
    logger.debug("%d positive root(s) below %s for degree %d", len(brackets), upper, p.degree)

    return brackets


def refine(p, bracket, digits=DEFAULT_DIGITS):
    """
    Bisects a bracket until its half-width is at most 10^-digits.

    Parameters
    ----------
    p : Poly
        Polynomial the bracket belongs to.
    bracket : RootBracket
        Interval holding exactly one root.
    digits : int, optional
        Requested decimal digits (default: 12).

    Returns
    -------
    RefinedRoot
        Midpoint and half-width of the final interval, or the exact root with
        half-width 0 if a midpoint hits it.
    """

    p = _deflate(p)
    tolerance = Fraction(1, 10 ** digits)
    lo, hi = bracket.lo, bracket.hi
    chain = sturm_chain(p) if bracket.sign_lo == bracket.sign_hi else None

    while (hi - lo) / 2 > tolerance:
        mid = (lo + hi) / 2
        value = sign(poly_eval(p, mid))
        if value == 0:
            return RefinedRoot(mid, Fraction(0), digits)
        if chain is None:
            inside_left = value != bracket.sign_lo
        else:
            inside_left = sturm_count(p, lo, mid, chain) == 1
        if inside_left:
            hi = mid
        else:
            lo = mid

    mid = (lo + hi) / 2
    if poly_eval(p, mid) == 0:
        return RefinedRoot(mid, Fraction(0), digits)

    return RefinedRoot(mid, (hi - lo) / 2, digits)


def positive_roots(p, digits=DEFAULT_DIGITS):
    """ All distinct positive roots of p, refined, in increasing order. """
    return [refine(p, bracket, digits) for bracket in isolate_positive_roots(p)]


def largest_positive_root(p, digits=DEFAULT_DIGITS):
    """
    Largest positive real root of p, which is the physical scale parameter.

    Parameters
    ----------
    p : Poly
        Nonzero polynomial.
    digits : int, optional
        Requested decimal digits (default: 12).

    Returns
    -------
    RefinedRoot
        Refined largest positive root.

    Raises
    ------
    NoPositiveRoot
        If p has no positive real root.
    """

    brackets = isolate_positive_roots(p)
    if not brackets:
        raise NoPositiveRoot("No positive real root for {}".format(p))

    return refine(p, brackets[-1], digits)


def certify(p, root):
    """
    Checks a refined root by exact signs: p vanishes at the value or changes
    sign across [value - half_width, value + half_width].
    """

    if root.is_exact:
        return poly_eval(p, root.value) == 0

    return sign(poly_eval(p, root.lo)) * sign(poly_eval(p, root.hi)) < 0


def _mp_fraction(value):
    return Fraction(mpmath.nstr(value, COMPLEX_DPS))


def complex_roots(p, dps=COMPLEX_DPS):
    """
    All complex roots of p by simultaneous iteration in multiprecision.

    Parameters
    ----------
    p : Poly
        Nonzero polynomial; a root at zero is divided out first.
    dps : int, optional
        Working decimal digits (default: 60).

    Returns
    -------
    roots : list of (Fraction, Fraction)
        Real and imaginary parts of every root.
    error : Fraction
        Estimated error bound of the roots.
    """

    p = _deflate(p)
    if p.degree < 1:
        return [], Fraction(0)

    coeffs = [int(c) for c in reversed(poly_primitive(p).coeffs)]
    steps = 100
    with mpmath.workdps(dps):
        while True:
            try:
                roots, error = mpmath.polyroots([mpmath.mpf(c) for c in coeffs], maxsteps=steps,
                                                extraprec=4 * dps, error=True)
                break
            except mpmath.mp.NoConvergence as err:
                if steps >= MAX_ROOT_STEPS:
                    raise SusyPertError("Complex roots of degree {} did not converge in {} steps.".format(
                        p.degree, steps)) from err
                steps *= 2
        result = [(_mp_fraction(mpmath.re(r)), _mp_fraction(mpmath.im(r))) for r in roots]
        error = _mp_fraction(error)

    logger.debug("%d complex roots of degree %d after at most %d steps (error %.3e)",
                 len(result), p.degree, steps, float(error))

    return result, error


def largest_real_part_root(p, digits=DEFAULT_DIGITS, real_roots=None):
    """
    Real part of the root of p with the largest real part.

    If that root is real, the certified largest positive root is returned.
    Otherwise the leading root is one of a complex-conjugate pair and its real
    part is returned with the iteration's error estimate as half-width.

    Parameters
    ----------
    p : Poly
        Nonzero polynomial.
    digits : int, optional
        Requested decimal digits (default: 12).
    real_roots : list of RefinedRoot, optional
        Refined positive real roots of p, if already known.

    Returns
    -------
    RefinedRoot

    Raises
    ------
    NoPositiveRoot
        If the largest real part is not positive.
    """

    real_roots = positive_roots(p, digits) if real_roots is None else real_roots
    roots, error = complex_roots(p)
    if not roots:
        raise NoPositiveRoot("No roots for {}".format(p))

    real_part, imag_part = max(roots, key=lambda root: root[0])
    if real_roots and real_roots[-1].value >= real_part - error - Fraction(1, 10 ** digits):
        return real_roots[-1]
    if real_part <= 0:
        raise NoPositiveRoot("No root with positive real part for {}".format(p))

    logger.debug("Leading roots are complex: %.12g +/- %.3gi", float(real_part), abs(float(imag_part)))
    return RefinedRoot(real_part, error, digits)


def select_root(p, rule=ROOT_LARGEST, digits=DEFAULT_DIGITS, real_roots=None):
    """
    Scale parameter chosen from the roots of p by a selection rule.

    ROOT_LARGEST takes the largest positive real root; ROOT_REAL_PART takes the
    real part of the root with the largest real part.
    """

    if rule not in ROOT_RULES:
        raise ValueError("Unknown root rule '{}', expected one of {}".format(rule, ', '.join(ROOT_RULES)))
    if rule == ROOT_REAL_PART:
        return largest_real_part_root(p, digits, real_roots)

    real_roots = positive_roots(p, digits) if real_roots is None else real_roots
    if not real_roots:
        raise NoPositiveRoot("No positive real root for {}".format(p))
    return real_roots[-1]
