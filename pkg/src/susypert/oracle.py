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
Reference eigenvalues by diagonalisation in a harmonic-oscillator basis.

H = p^2 + x^2 + g x^4 (hbar = 2m = 1) is written in the eigenbasis of
p^2 + omega^2 x^2, where x = (b + b^+) / sqrt(2 omega). Only offsets 0, 2 and 4
are occupied, so the matrix is kept in LAPACK's lower banded layout.
"""

import logging

import numpy as np
from scipy.linalg import eigvals_banded

from susypert.ratpoly import SusyPertError

logger = logging.getLogger(__name__)

BANDWIDTH = 4
MIN_DIM = 8
CONVERGENCE_TOL = 1e-8


class NotConverged(SusyPertError):
    """ Raised when doubling the basis still moves an eigenvalue. """


class BandedHamiltonian(object):
    """
    Symmetric banded matrix of p^2 + x^2 + g x^4.

    bands[k, m] holds the element <m + k| H |m> for k = 0..4; the upper
    triangle follows by symmetry.
    """

    def __init__(self, g, dim, omega, bands):
        """
        Constructor of BandedHamiltonian class.

        Parameters
        ----------
        g : float
            Quartic coupling.
        dim : int
            Basis size.
        omega : float
            Frequency of the basis oscillator (1 for the basis of p^2 + x^2).
        bands : numpy.ndarray
            Lower banded storage, shape (5, dim).
        """

        self.g = g
        self.dim = dim
        self.omega = omega
        self.bands = bands

    def band(self, offset):
        """
        Elements <m| H |m + offset>, m = 0..dim-|offset|-1.

        Parameters
        ----------
        offset : int
            Band offset; negative offsets give the same values as positive ones.

        Returns
        -------
        numpy.ndarray
        """

        offset = abs(offset)
        if offset > BANDWIDTH:
            return np.zeros(max(self.dim - offset, 0))
        return self.bands[offset, :self.dim - offset]

    def to_dense(self):
        matrix = np.diag(self.band(0))
        for offset in range(1, BANDWIDTH + 1):
            matrix += np.diag(self.band(offset), offset) + np.diag(self.band(offset), -offset)
        return matrix

    def parity_blocks(self):
        """ Even and odd basis blocks; x^2 and x^4 never couple them. """
        dense = self.to_dense()
        return dense[::2, ::2], dense[1::2, 1::2]


def build_hamiltonian(g, dim, omega=1.0):
    """
    Hamiltonian matrix of p^2 + x^2 + g x^4 in a harmonic-oscillator basis.

    Parameters
    ----------
    g : float
        Quartic coupling (>= 0).
    dim : int
        Basis size (>= 8).
    omega : float, optional
        Basis frequency (default: 1, where the unperturbed part is diagonal with entries 2m + 1).

    Returns
    -------
    BandedHamiltonian
    """

    g, omega = float(g), float(omega)
    if dim < MIN_DIM:
        raise ValueError("The basis needs at least {} states, got {}".format(MIN_DIM, dim))
    if g < 0:
        raise ValueError("The coupling must not be negative: {}".format(g))
    if omega <= 0:
        raise ValueError("The basis frequency must be positive: {}".format(omega))

    m = np.arange(dim, dtype=float)
    pair = np.sqrt((m + 1) * (m + 2))
    quad = pair * np.sqrt((m + 3) * (m + 4))
    harmonic_gap = 1.0 - omega ** 2

    bands = np.zeros((BANDWIDTH + 1, dim))
    bands[0] = omega * (2 * m + 1) + harmonic_gap * (2 * m + 1) / (2 * omega) \
        + g * (6 * m ** 2 + 6 * m + 3) / (4 * omega ** 2)
    bands[2, :dim - 2] = (harmonic_gap * pair / (2 * omega) + g * (2 * m + 3) * pair / (2 * omega ** 2))[:dim - 2]
    bands[4, :dim - 4] = (g * quad / (4 * omega ** 2))[:dim - 4]

    return BandedHamiltonian(g, dim, omega, bands)


def _lowest(h, k):
    return eigvals_banded(h.bands, lower=True, select='i', select_range=(0, k - 1))


def lowest_eigenvalues(h, k, tol=CONVERGENCE_TOL):
    """
    The k smallest eigenvalues, checked against a basis of twice the size.

    Parameters
    ----------
    h : BandedHamiltonian
        Matrix to diagonalise.
    k : int
        Number of eigenvalues (<= dim / 4).
    tol : float, optional
        Largest allowed change under doubling (default: 1e-8).

    Returns
    -------
    list of float
        Eigenvalues in increasing order.

    Raises
    ------
    NotConverged
        If doubling the basis moves any of them by tol or more.
    """

    if not 1 <= k <= h.dim // 4:
        raise ValueError("k = {} is outside 1..{} for a basis of {}".format(k, h.dim // 4, h.dim))

    values = _lowest(h, k)
    doubled = _lowest(build_hamiltonian(h.g, 2 * h.dim, h.omega), k)
    change = float(np.max(np.abs(values - doubled)))
    logger.debug("g=%s dim=%d omega=%.4f: doubling change %.3e", h.g, h.dim, h.omega, change)
    if change >= tol:
        raise NotConverged("Eigenvalues moved by {:.3e} when doubling the basis of {} states "
                           "(g = {}).".format(change, h.dim, h.g))

    return values.tolist()


def default_dim(g):
    """ Basis size by coupling: 64 up to g = 1, 128 up to 100, 256 beyond. """

    if g <= 1:
        return 64
    if g <= 100:
        return 128
    return 256


def variational_omega(g):
    """
    Basis frequency minimising the Gaussian trial energy, the largest real
    root of omega^3 - omega - 3g = 0.
    """

    roots = np.roots([1.0, 0.0, -1.0, -3.0 * float(g)])
    return float(np.max(roots[np.abs(roots.imag) < 1e-9].real))


def exact_energies(g, k=1, dim=None, omega=None):
    """
    The k lowest eigenvalues of p^2 + x^2 + g x^4.

    Parameters
    ----------
    g : float or Fraction
        Quartic coupling.
    k : int, optional
        Number of levels (default: 1).
    dim : int, optional
        Basis size (default: by coupling, see default_dim).
    omega : float, optional
        Basis frequency (default: the variational frequency).

    Returns
    -------
    list of float
    """

    g = float(g)
    dim = default_dim(g) if dim is None else dim
    omega = variational_omega(g) if omega is None else omega

    return lowest_eigenvalues(build_hamiltonian(g, dim, omega), k)
