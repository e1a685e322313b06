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
Exact rational numbers and dense univariate polynomials over them.

Rationals are plain ``fractions.Fraction`` instances, which are kept in
reduced form with a positive denominator by construction. Polynomials are
immutable and store their coefficients in ascending order of power.
"""

import math
import logging
from fractions import Fraction
from functools import reduce
from numbers import Rational

import regex as re

logger = logging.getLogger(__name__)

DECIMAL_PATTERN = re.compile(r'^(?P<sign>[+-]?)(?P<int>\d+)(?:\.(?P<frac>\d*))?(?:[eE](?P<exp>[+-]?\d+))?$')


class SusyPertError(Exception):
    """ Base class of all errors raised by susypert. """


class ZeroPolynomial(SusyPertError):
    """ Raised when an operation needs a nonzero polynomial. """


def parse_decimal(text):
    """
    Parses decimal text into an exact rational, e.g. "0.001" -> 1/1000.

    Parameters
    ----------
    text : str
        Decimal number, optionally signed and with an exponent ("1e-3").

    Returns
    -------
    Fraction
        Exact value of the decimal string.
    """

    match = DECIMAL_PATTERN.match(text.strip())
    if match is None:
        raise ValueError("'{}' is not a decimal number.".format(text))

    frac = match.group('frac') or ''
    value = Fraction(int(match.group('int') + frac), 10 ** len(frac))
    if match.group('exp') is not None:
        value *= Fraction(10) ** int(match.group('exp'))
    if match.group('sign') == '-':
        value = -value

    return value


def to_rational(value):
    """
    Converts integers, rationals and decimal strings to a Fraction.

    Floats are refused, since their binary value is rarely the number that was meant.
    """

    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_decimal(value)
    raise TypeError("Cannot use {!r} ({}) as an exact rational.".format(value, type(value).__name__))


def render_fixed(value, places):
    """
    Renders a rational with a fixed number of decimal places (round half to even).

    Parameters
    ----------
    value : Fraction
        Value to render.
    places : int
        Number of digits after the decimal point.

    Returns
    -------
    str
        Decimal text, e.g. "1.39017".
    """

    scaled = round(to_rational(value) * 10 ** places)
    sign = '-' if scaled < 0 else ''
    digits = str(abs(scaled)).rjust(places + 1, '0')
    if places == 0:
        return sign + digits

    return sign + digits[:-places] + '.' + digits[-places:]


def render_exact(value):
    """
    Shortest exact decimal text of a rational ("0.001", "10"), or "p/q" when the
    decimal expansion does not terminate.
    """

    value = to_rational(value)
    rest, places = value.denominator, 0
    for prime in (2, 5):
        count = 0
        while rest % prime == 0:
            rest //= prime
            count += 1
        places = max(places, count)
    if rest != 1:
        return str(value)

    return render_fixed(value, places)


def decimal_exponent(value):
    """ Returns e with 10^e <= |value| < 10^(e+1) for a nonzero rational. """

    value = abs(to_rational(value))
    exponent = len(str(value.numerator)) - len(str(value.denominator))
    while Fraction(10) ** exponent > value:
        exponent -= 1
    while Fraction(10) ** (exponent + 1) <= value:
        exponent += 1

    return exponent


def render_significant(value, significant=6):
    """
    Renders a rational with a fixed number of significant digits, the way the
    printed eigenvalue tables do ("1.39017", "34.8238", "171.046", "14.0000").

    Parameters
    ----------
    value : Fraction
        Value to render.
    significant : int, optional
        Number of significant digits (default: 6).

    Returns
    -------
    str
        Decimal text.
    """

    value = to_rational(value)
    if value == 0:
        return render_fixed(value, significant - 1)

    places = max(significant - 1 - decimal_exponent(value), 0)
    # rounding may carry into a new leading digit (9.999996 -> 10.0000)
    if places > 0 and abs(round(value * 10 ** places)) >= 10 ** significant:
        places -= 1

    return render_fixed(value, places)


class Poly(object):
    """
    Dense univariate polynomial over the rationals.

    The coefficient with index k belongs to var^k. Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    def __init__(self, coeffs=(), var='a'):
        """
        Constructor of Poly class.

        Parameters
        ----------
        coeffs : iterable
            Coefficients in ascending order of power (int, Fraction or decimal str).
        var : str, optional
            Name of the indeterminate, only used for rendering (default: 'a').
        """

        coeffs = [to_rational(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)
        self.var = var

    @classmethod
    def constant(cls, value, var='a'):
        return cls([value], var=var)

    @classmethod
    def monomial(cls, power, coeff=1, var='a'):
        """ Returns coeff * var^power. """
        return cls([0] * power + [coeff], var=var)

    @property
    def coeffs(self):
        """
        Coefficients in ascending order of power.

        Returns
        -------
        tuple of Fraction
        """
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    @property
    def is_zero(self):
        return not self._coeffs

    @property
    def leading(self):
        """ Leading coefficient (0 for the zero polynomial). """
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __getitem__(self, power):
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __call__(self, x):
        return poly_eval(self, x)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (Rational, str)):
            return self._coeffs == Poly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self):
        return poly_scale(self, -1)

    def __add__(self, other):
        return poly_add(self, _coerce(other, self.var))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _coerce(other, self.var))

    def __rsub__(self, other):
        return poly_sub(_coerce(other, self.var), self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return poly_scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return poly_scale(self, 1 / to_rational(other))

    def __str__(self):
        """
        Debug rendering "c_k*a^k + ... + c_0*a^0" with exact rationals "p/q".
        """
        if self.is_zero:
            return '0'

        text = ''
        for power in range(self.degree, -1, -1):
            coeff = self._coeffs[power]
            if coeff == 0:
                continue
            if not text:
                text = '-' if coeff < 0 else ''
            else:
                text += ' - ' if coeff < 0 else ' + '
            text += '{}*{}^{}'.format(abs(coeff), self.var, power)

        return text

    def __repr__(self):
        return "Poly('{}')".format(self)


def _coerce(value, var):
    if isinstance(value, Poly):
        return value
    return Poly.constant(value, var=var)


def poly_add(p, q):
    """ Coefficient-wise sum p + q. """

    size = max(len(p.coeffs), len(q.coeffs))
    return Poly([p[k] + q[k] for k in range(size)], var=p.var)


def poly_sub(p, q):
    """ Coefficient-wise difference p - q. """

    size = max(len(p.coeffs), len(q.coeffs))
    return Poly([p[k] - q[k] for k in range(size)], var=p.var)


def poly_scale(p, factor):
    """ Multiplies every coefficient of p by a rational factor. """

    factor = to_rational(factor)
    return Poly([c * factor for c in p.coeffs], var=p.var)


def poly_mul(p, q):
    """
    Exact product of two polynomials, c_m = sum_{i+j=m} p_i q_j.

    Parameters
    ----------
    p, q : Poly
        Factors.

    Returns
    -------
    Poly
        Product; its degree is deg(p) + deg(q) for nonzero factors.
    """

    if p.is_zero or q.is_zero:
        return Poly(var=p.var)

    coeffs = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, p_i in enumerate(p.coeffs):
        if p_i == 0:
            continue
        for j, q_j in enumerate(q.coeffs):
            coeffs[i + j] += p_i * q_j

    return Poly(coeffs, var=p.var)


def poly_derivative(p):
    """ Formal derivative of p. """

    return Poly([k * c for k, c in enumerate(p.coeffs)][1:], var=p.var)


def poly_eval(p, x):
    """
    Evaluates p at x by Horner's scheme.

    With a rational x the result is exact. Any other number type that supports
    + and * with Fractions (e.g. float) is accepted as well and gives a result of that type.

    Parameters
    ----------
    p : Poly
        Polynomial to evaluate.
    x : Fraction, int or float
        Point of evaluation.

    Returns
    -------
    Fraction or float
        Value p(x).
    """

    if isinstance(x, (Rational, str)):
        x = to_rational(x)
        result = Fraction(0)
    else:
        result = 0.0

    for coeff in reversed(p.coeffs):
        result = result * x + coeff

    return result


def poly_normalize(p):
    """
    Returns the monic polynomial p / lead(p), which has the same roots.

    Raises
    ------
    ZeroPolynomial
        If p is the zero polynomial.
    """

    if p.is_zero:
        raise ZeroPolynomial("The zero polynomial has no monic form.")

    return poly_scale(p, 1 / p.leading)


def poly_divmod(p, q):
    """
    Euclidean division over the rationals, p = quotient * q + remainder.

    Parameters
    ----------
    p : Poly
        Dividend.
    q : Poly
        Divisor (nonzero).

    Returns
    -------
    quotient, remainder : Poly
        deg(remainder) < deg(q).
    """

    if q.is_zero:
        raise ZeroPolynomial("Division by the zero polynomial.")

    remainder = list(p.coeffs)
    quotient = [Fraction(0)] * max(len(remainder) - len(q.coeffs) + 1, 0)
    lead = q.leading
    for shift in range(len(quotient) - 1, -1, -1):
        factor = remainder[shift + q.degree] / lead
        quotient[shift] = factor
        if factor == 0:
            continue
        for k, q_k in enumerate(q.coeffs):
            remainder[shift + k] -= factor * q_k

    return Poly(quotient, var=p.var), Poly(remainder[:q.degree] if q.degree > 0 else [], var=p.var)


def poly_compose_scale(p, factor):
    """ Returns the polynomial a -> p(factor * a). """

    factor = to_rational(factor)
    return Poly([c * factor ** k for k, c in enumerate(p.coeffs)], var=p.var)


def poly_primitive(p):
    """
    Rescales p by a positive rational so that its coefficients are coprime integers.

    The sign of p is kept everywhere, which is what Sturm chains need.
    """

    if p.is_zero:
        return p

    denominator = reduce(lambda x, y: x * y // math.gcd(x, y), [c.denominator for c in p.coeffs], 1)
    numerators = [c.numerator * (denominator // c.denominator) for c in p.coeffs]
    content = reduce(math.gcd, numerators, 0)

    return Poly([n // content for n in numerators], var=p.var)
