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
Perturbation coefficients of the superpotential correction.

The correction to the harmonic superpotential is the odd series
dW(x) = sum_{N>=1} f_N(a) x^(2N+1), where every f_N is a polynomial in the
harmonic scale parameter a. Matching the Riccati equation power by power in x
gives the recursion

    f_0 = a
    f_N = (S_{N-1} - delta_{N1} - g delta_{N2}) / (2N + 2n + alpha_n)

with S_M = sum_{k=0}^{M} f_k f_{M-k}. The energy shift vanishes at every
order, and the coefficient of x^(2N+2) left over at truncation order N is the
constraint polynomial P_N(a) = S_N - g delta_{N1}, whose largest positive
root fixes a. The energy is then E_n = 2a(n + 1/2).

The perturbation parameter of the formal expansion is absorbed into the order
index N; dW_N corresponds to the single term f_N x^(2N+1).
"""

import logging
import threading
from fractions import Fraction
from collections import OrderedDict

from susypert.ratpoly import Poly
from susypert.ratpoly import SusyPertError
from susypert.ratpoly import to_rational
from susypert.ratpoly import poly_mul
from susypert.ratpoly import poly_eval

logger = logging.getLogger(__name__)

ALPHA_0 = 1


class UnsupportedState(SusyPertError):
    """ Raised for quantum numbers whose superpotential poles are not handled. """


def alpha(n):
    """
    State dependent shift of the recursion divisor, alpha_0 = 1 and
    alpha_n = (n - 1) + alpha_(n-1).

    Parameters
    ----------
    n : int
        Quantum number (>= 0).

    Returns
    -------
    int
        alpha_n.
    """

    if n < 0:
        raise ValueError("The quantum number must not be negative: {}".format(n))

    value = ALPHA_0
    for m in range(1, n + 1):
        value = (m - 1) + value

    return value


class AlphaSequence(object):
    """
    The shifts alpha_0, ..., alpha_n, built by the recursion and checked
    against the closed form alpha_n = n(n-1)/2 + 1.
    """

    def __init__(self, n):
        values = [ALPHA_0]
        for m in range(1, n + 1):
            values.append((m - 1) + values[-1])

        for m, value in enumerate(values):
            if value != m * (m - 1) // 2 + 1:
                raise AssertionError("alpha_{} = {} breaks the closed form.".format(m, value))

        self.values = tuple(values)

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


def alpha_sequence(n):
    """ Returns the AlphaSequence alpha_0..alpha_n. """
    return AlphaSequence(n)


def divisor(n, order):
    """ Divisor 2N + 2n + alpha_n of the order-N coefficient. """
    return 2 * order + 2 * n + alpha(n)


def _convolution(coeffs, top):
    """ S_top = sum_{k=0}^{top} f_k f_{top-k}, using the symmetry of the sum. """

    total = Poly()
    for k in range((top + 1) // 2):
        total = total + poly_mul(coeffs[k], coeffs[top - k])
    total = total * 2
    if top % 2 == 0:
        total = total + poly_mul(coeffs[top // 2], coeffs[top // 2])

    return total


class CoefficientTable(object):
    """
    The coefficient polynomials f_0, ..., f_Nmax for one state n and coupling g.

    Tables are immutable. Extending a table returns a new one that shares all
    lower orders, so f_N never changes once computed.
    """

    def __init__(self, n, g, coeffs):
        """
        Constructor of CoefficientTable class.

        Parameters
        ----------
        n : int
            Quantum number.
        g : Fraction
            Quartic coupling.
        coeffs : sequence of Poly
            f_0, f_1, ... in order.
        """

        self.n = n
        self.g = g
        self.coeffs = tuple(coeffs)

    @classmethod
    def seed(cls, n, g):
        """ Table holding only f_0 = a. """
        return cls(n, to_rational(g), [Poly.monomial(1)])

    @property
    def nmax(self):
        return len(self.coeffs) - 1

    def __getitem__(self, order):
        return self.coeffs[order]

    def __len__(self):
        return len(self.coeffs)

    def extend(self, nmax):
        """
        Returns a table reaching order nmax, reusing every order already present.

        Parameters
        ----------
        nmax : int
            Highest order needed.

        Returns
        -------
        CoefficientTable
            self if it is already deep enough, else a longer table.
        """

        if nmax <= self.nmax:
            return self

        coeffs = list(self.coeffs)
        for order in range(self.nmax + 1, nmax + 1):
            numerator = _convolution(coeffs, order - 1)
            if order == 1:
                numerator = numerator - 1
            elif order == 2:
                numerator = numerator - self.g
            coeffs.append(numerator / divisor(self.n, order))
            logger.debug("n=%d g=%s: f_%d has degree %d", self.n, self.g, order, coeffs[-1].degree)

        return CoefficientTable(self.n, self.g, coeffs)

    def evaluate(self, a):
        """
        Values f_1(a), ..., f_Nmax(a).

        Parameters
        ----------
        a : Fraction or float
            Scale parameter.

        Returns
        -------
        list
            Coefficient values, exact for rational a.
        """
        return [poly_eval(f, a) for f in self.coeffs[1:]]


class CoefficientCache(object):
    """
    Coefficient tables per (n, g), extended on demand.

    Readers may share one cache between threads; updates are serialised by a lock
    and only ever replace a table by a longer one.
    """

    def __init__(self):
        self._tables = {}
        self._lock = threading.Lock()

    def get(self, n, g, nmax):
        key = (n, to_rational(g))
        table = self._tables.get(key)
        if table is not None and table.nmax >= nmax:
            return table

        with self._lock:
            table = self._tables.get(key)
            if table is None:
                table = CoefficientTable.seed(*key)
            table = table.extend(nmax)
            self._tables[key] = table

        return table

    def clear(self):
        with self._lock:
            self._tables.clear()


_default_cache = CoefficientCache()


def coefficient_table(n, g, nmax, cache=None):
    """
    Coefficient polynomials f_0..f_Nmax of the superpotential correction.

    Parameters
    ----------
    n : int
        Quantum number (>= 0).
    g : Fraction, int or str
        Quartic coupling (>= 0).
    nmax : int
        Highest order (>= 1).
    cache : CoefficientCache, optional
        Cache to use (default: the module-wide cache).

    Returns
    -------
    CoefficientTable
        Table with at least nmax + 1 entries.
    """

    g = to_rational(g)
    if n < 0:
        raise ValueError("The quantum number must not be negative: {}".format(n))
    if g < 0:
        raise ValueError("The coupling must not be negative: {}".format(g))
    if nmax < 1:
        raise ValueError("The perturbation order must be at least 1: {}".format(nmax))

    cache = _default_cache if cache is None else cache
    return cache.get(n, g, nmax)


def constraint(n, g, order, cache=None):
    """
    Constraint polynomial P_N(a) = sum_{k=0}^{N} f_k f_{N-k} - g delta_{N1}.

    Parameters
    ----------
    n : int
        Quantum number.
    g : Fraction, int or str
        Quartic coupling.
    order : int
        Perturbation order N (>= 1).
    cache : CoefficientCache, optional
        Cache for the coefficient table.

    Returns
    -------
    Poly
        P_N, of degree N + 2.
    """

    table = coefficient_table(n, g, order, cache=cache)
    poly = _convolution(table.coeffs, order)
    if order == 1:
        poly = poly - table.g

    return poly


def _series_mul(s, t):
    product = {}
    for i, s_i in s.items():
        for j, t_j in t.items():
            product[i + j] = product.get(i + j, Poly()) + poly_mul(s_i, t_j)
    return product


def _series_add(*series):
    total = {}
    for s in series:
        for power, coeff in s.items():
            total[power] = total.get(power, Poly()) + coeff
    return total


def riccati_coefficients(n, g, order, cache=None):
    """
    Residual of the perturbed Riccati equation, symbolic in a.

    Builds dW^2 + 2 W dW - dW' - dV with the truncated correction
    dW = sum_{k=1}^{N} f_k x^(2k+1), the harmonic superpotential W at scale a and
    dV = (1 - a^2) x^2 + g x^4, with a zero energy shift. The simple pole of W
    for n = 1 (W = a x - 1/x) is multiplied out analytically.

    Parameters
    ----------
    n : int
        Quantum number, 0 or 1.
    g : Fraction, int or str
        Quartic coupling.
    order : int
        Truncation order N.
    cache : CoefficientCache, optional
        Cache for the coefficient table.

    Returns
    -------
    OrderedDict
        Power of x -> coefficient Poly in a, for the even powers 0..4N+2.
        Powers 2..2N vanish identically, power 2N+2 equals P_N(a).
    """

    if n not in (0, 1):
        raise UnsupportedState("The residual is only defined for n in (0, 1), got n = {}".format(n))

    table = coefficient_table(n, g, order, cache=cache)
    a = Poly.monomial(1)

    w = {1: a}
    if n == 1:
        w[-1] = Poly.constant(-1)
    dw = {2 * k + 1: table[k] for k in range(1, order + 1)}
    dw_prime = {2 * k: table[k] * (2 * k + 1) for k in range(1, order + 1)}
    dv = {2: 1 - poly_mul(a, a), 4: Poly.constant(table.g)}

    minus = {power: -coeff for power, coeff in _series_add(dw_prime, dv).items()}
    residual = _series_add(_series_mul(dw, dw), _series_mul({p: c * 2 for p, c in w.items()}, dw), minus)

    return OrderedDict((power, residual.get(power, Poly())) for power in range(0, 4 * order + 3, 2))


def riccati_residual(n, g, order, a_star, cache=None):
    """
    Riccati residual as a polynomial in x at a fixed scale parameter.

    Parameters
    ----------
    n : int
        Quantum number, 0 or 1.
    g : Fraction, int or str
        Quartic coupling.
    order : int
        Truncation order N.
    a_star : Fraction
        Positive scale parameter, usually the solved root.
    cache : CoefficientCache, optional
        Cache for the coefficient table.

    Returns
    -------
    Poly
        Residual in the indeterminate x. Only x^(2N+2) (the constraint value) and
        the truncation terms x^(2N+4) .. x^(4N+2) survive.
    """

    a_star = to_rational(a_star)
    if a_star <= 0:
        raise ValueError("The scale parameter must be positive: {}".format(a_star))

    symbolic = riccati_coefficients(n, g, order, cache=cache)
    coeffs = [Fraction(0)] * (max(symbolic) + 1)
    for power, coeff in symbolic.items():
        coeffs[power] = poly_eval(coeff, a_star)

    return Poly(coeffs, var='x')


def energy_shift_derivation(n, g, order, cache=None):
    """
    Checks that matching the Riccati equation order by order leaves no energy shift.

    The x^0 term of the residual would carry -d(eps); it is identically zero and
    so is every power up to x^(2N), which is why E_n = 2a(n + 1/2) at all orders.

    Returns
    -------
    bool
        True if all coefficients of x^0 .. x^(2N) vanish and x^(2N+2) is P_N.
    """

    symbolic = riccati_coefficients(n, g, order, cache=cache)
    lower = all(symbolic[power].is_zero for power in range(0, 2 * order + 1, 2))

    return lower and symbolic[2 * order + 2] == constraint(n, g, order, cache=cache)
