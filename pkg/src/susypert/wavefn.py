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
Wavefunctions psi_n = chi_n * phi_n on a spatial grid.

chi_n = H_n(sqrt(a) x) exp(-a x^2 / 2) is the harmonic eigenfunction and
phi_n = exp(-S(x)) the perturbation factor, where S' = dW = sum_k f_k x^(2k+1).
Evaluation is in floating point; the exact pipeline ends at a*.
"""

import logging
from dataclasses import dataclass, replace

import numpy as np
import pandas as pd
from scipy.special import eval_hermite
from scipy.integrate import simpson

from susypert.ratpoly import SusyPertError
from susypert.recursion import coefficient_table

logger = logging.getLogger(__name__)

DEFAULT_POINTS = 4001
DEFAULT_HALFWIDTH_SCALE = 10
NODE_THRESHOLD = 1e-10
TAIL_RATIO = 1e-12


class NodeSingularity(SusyPertError):
    """ Raised when a superpotential is evaluated at a zero of H_n. """


class TailNotDecayed(SusyPertError):
    """ Raised when psi has not decayed at the ends of the quadrature grid. """


@dataclass(frozen=True)
class WavefunctionModel:
    """
    Everything needed to evaluate psi for one solved estimate.

    f_values are f_1(a*), ..., f_N(a*); norm is 1 until the model is normalised.
    """

    n: int
    a_star: float
    f_values: tuple = ()
    norm: float = 1.0

    def __post_init__(self):
        if self.a_star <= 0:
            raise ValueError("The scale parameter must be positive: {}".format(self.a_star))
        object.__setattr__(self, 'a_star', float(self.a_star))
        object.__setattr__(self, 'f_values', tuple(float(f) for f in self.f_values))

    @property
    def order(self):
        return len(self.f_values)

    @property
    def energy(self):
        return (2 * self.n + 1) * self.a_star

    @property
    def halfwidth(self):
        """ Default grid half-width 10 / sqrt(a*). """
        return DEFAULT_HALFWIDTH_SCALE / np.sqrt(self.a_star)


def build_model(estimate, cache=None):
    """
    Wavefunction model of an energy estimate.

    The coefficients are evaluated exactly at the refined root and only then
    converted to floats.

    Parameters
    ----------
    estimate : EnergyEstimate
        Solved estimate.
    cache : CoefficientCache, optional
        Cache for the coefficient tables.

    Returns
    -------
    WavefunctionModel
    """

    problem = estimate.problem
    table = coefficient_table(problem.n, problem.g, problem.order, cache=cache)
    f_values = table.evaluate(estimate.a_star.value)[:problem.order]

    return WavefunctionModel(problem.n, float(estimate.a_star.value), tuple(f_values))


def hermite(n, y):
    """ Physicists' Hermite polynomial H_n(y), H_1(y) = 2y. """

    if n < 0:
        raise ValueError("The Hermite degree must not be negative: {}".format(n))
    return eval_hermite(n, y)


def _harmonic_terms(n, a, x):
    # W_n and W_n' from H_(n-1), H_n, H_(n+1); nan at nodes
    x = np.asarray(x, dtype=float)
    root_a = np.sqrt(a)
    y = root_a * x
    h_n = hermite(n, y)
    h_lower = hermite(max(n - 1, 0), y)
    with np.errstate(divide='ignore', invalid='ignore'):
        ratio = np.where(np.abs(h_n) < NODE_THRESHOLD, np.nan, 2 * n * h_lower / h_n)
        w = root_a * (y - ratio)
        dw = a * (1 + ratio ** 2 - 2 * y * ratio + 2 * n)
    return h_n, w, dw


def superpotential(n, a, x):
    """
    Harmonic superpotential W_n = -sqrt(a) [y - H_(n+1)(y) / H_n(y)], y = sqrt(a) x.

    Parameters
    ----------
    n : int
        Quantum number.
    a : float
        Scale parameter (> 0).
    x : float or numpy.ndarray
        Position(s).

    Returns
    -------
    float or numpy.ndarray
        W_n(x); a x for n = 0, a x - 1/x for n = 1.

    Raises
    ------
    NodeSingularity
        If |H_n(sqrt(a) x)| is below NODE_THRESHOLD at any of the positions.
    """

    h_n, w, _ = _harmonic_terms(n, a, x)
    if np.any(np.abs(h_n) < NODE_THRESHOLD):
        raise NodeSingularity("W_{} is singular at a node of H_{} (a = {}).".format(n, n, a))

    return w[()] if np.ndim(w) == 0 else w


def delta_superpotential(model, x):
    """ Superpotential correction dW(x) = sum_k f_k x^(2k+1). """

    x = np.asarray(x, dtype=float)
    result = np.zeros_like(x)
    for k, f in enumerate(model.f_values, start=1):
        result = result + f * x ** (2 * k + 1)
    return result[()] if result.ndim == 0 else result


def _delta_derivative(model, x):
    result = np.zeros_like(x)
    for k, f in enumerate(model.f_values, start=1):
        result = result + (2 * k + 1) * f * x ** (2 * k)
    return result


def perturbation_exponent(model, x):
    """
    S(x) = sum_k f_k x^(2k+2) / (2k+2), the antiderivative of dW with S(0) = 0.

    Parameters
    ----------
    model : WavefunctionModel
        Model holding f_1..f_N.
    x : float or numpy.ndarray
        Position(s).

    Returns
    -------
    float or numpy.ndarray
    """

    x = np.asarray(x, dtype=float)
    result = np.zeros_like(x)
    for k, f in enumerate(model.f_values, start=1):
        result = result + f * x ** (2 * k + 2) / (2 * k + 2)
    return result[()] if result.ndim == 0 else result


def chi(model, x):
    x = np.asarray(x, dtype=float)
    return hermite(model.n, np.sqrt(model.a_star) * x) * np.exp(-model.a_star * x ** 2 / 2)


def phi(model, x):
    with np.errstate(over='ignore'):
        return np.exp(-perturbation_exponent(model, x))


def psi(model, x):
    """
    Total wavefunction norm * H_n(sqrt(a*) x) exp(-a* x^2 / 2) exp(-S(x)).

    Parameters
    ----------
    model : WavefunctionModel
        Model to evaluate.
    x : float or numpy.ndarray
        Position(s).

    Returns
    -------
    float or numpy.ndarray
        psi(x); it has the parity of n.
    """

    with np.errstate(over='ignore', invalid='ignore'):
        return model.norm * chi(model, x) * phi(model, x)


def normalize(model, grid_halfwidth=None, points=DEFAULT_POINTS):
    """
    Model whose psi has unit norm on [-L, L] by composite Simpson quadrature.

    Parameters
    ----------
    model : WavefunctionModel
        Model to normalise; its current norm is ignored.
    grid_halfwidth : float, optional
        L (default: 10 / sqrt(a*)).
    points : int, optional
        Odd number of grid points (default: 4001).

    Returns
    -------
    WavefunctionModel
        Copy of the model with the normalisation constant set.

    Raises
    ------
    TailNotDecayed
        If |psi| at either grid end is not below 1e-12 of its peak.
    """

    if points < 3 or points % 2 == 0:
        raise ValueError("Simpson quadrature needs an odd number of points >= 3, got {}".format(points))
    halfwidth = model.halfwidth if grid_halfwidth is None else float(grid_halfwidth)
    if halfwidth <= 0:
        raise ValueError("The grid half-width must be positive: {}".format(halfwidth))

    x = np.linspace(-halfwidth, halfwidth, points)
    values = psi(replace(model, norm=1.0), x)
    finite = np.isfinite(values)
    if not np.all(finite):
        first = np.abs(x[~finite]).min()
        raise TailNotDecayed("psi_{} overflows for |x| >= {:.4g} on the grid |x| <= {:.4g}: exp(-S) grows "
                             "without bound because f_{} = {:.3e} < 0.".format(
                                 model.n, first, halfwidth, model.order, model.f_values[-1]))

    magnitude = np.abs(values)
    peak = np.max(magnitude)
    tail = max(magnitude[0], magnitude[-1])
    if not tail < TAIL_RATIO * peak:
        raise TailNotDecayed("psi_{} has not decayed at |x| = {:.4g}: tail/peak = {:.3e} "
                             "(N = {}).".format(model.n, halfwidth, tail / peak, model.order))

    integral = simpson(values ** 2, x=x)
    logger.debug("n=%d N=%d: integral of psi^2 = %.12g on %d points", model.n, model.order, integral, points)

    return replace(model, norm=1.0 / np.sqrt(integral))


def local_residual(model, g, x):
    """
    Local Schroedinger residual psi''/psi - (x^2 + g x^4 - E).

    psi''/psi = w^2 - w' with w = W_n + dW the total superpotential. The residual
    vanishes for an exact eigenfunction and grows with |x| through the
    truncation of dW. nan at nodes of H_n.

    Parameters
    ----------
    model : WavefunctionModel
        Model; its energy is (2n + 1) a*.
    g : float
        Quartic coupling of the potential.
    x : float or numpy.ndarray
        Position(s).

    Returns
    -------
    float or numpy.ndarray
    """

    x = np.asarray(x, dtype=float)
    _, w, dw = _harmonic_terms(model.n, model.a_star, x)
    total = w + delta_superpotential(model, x)
    total_derivative = dw + _delta_derivative(model, x)
    result = total ** 2 - total_derivative - (x ** 2 + float(g) * x ** 4 - model.energy)

    return result[()] if result.ndim == 0 else result


def grid_frame(model, grid_halfwidth=None, points=DEFAULT_POINTS, g=None):
    """
    Samples chi, phi and psi on a uniform grid.

    Parameters
    ----------
    model : WavefunctionModel
        Model to sample, normally normalised.
    grid_halfwidth : float, optional
        Half-width of the grid (default: 10 / sqrt(a*)).
    points : int, optional
        Number of grid points (default: 4001).
    g : float, optional
        Coupling; if given, a residual column is added.

    Returns
    -------
    pandas.DataFrame
        Columns x, chi, phi, psi and optionally residual.
    """

    halfwidth = model.halfwidth if grid_halfwidth is None else float(grid_halfwidth)
    x = np.linspace(-halfwidth, halfwidth, points)
    columns = {'x': x, 'chi': model.norm * chi(model, x), 'phi': phi(model, x), 'psi': psi(model, x)}
    if g is not None:
        columns['residual'] = local_residual(model, g, x)

    return pd.DataFrame(columns)
