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


import logging
import unittest

import numpy as np

from susypert.oracle import NotConverged
from susypert.oracle import build_hamiltonian
from susypert.oracle import lowest_eigenvalues
from susypert.oracle import variational_omega
from susypert.oracle import default_dim
from susypert.oracle import exact_energies

logging.basicConfig(level=logging.INFO)


class TestBandedHamiltonian(unittest.TestCase):

    def setUp(self):
        self.h = build_hamiltonian(1.0, 32)

    def test_harmonic_diagonal(self):
        """
        At g = 0 the matrix is diag(2m + 1).
        """
        h = build_hamiltonian(0.0, 16)
        np.testing.assert_allclose(h.band(0), 2 * np.arange(16) + 1)
        np.testing.assert_allclose(h.band(2), 0.0, atol=1e-15)
        np.testing.assert_allclose(h.band(4), 0.0)

    def test_quartic_elements(self):
        """
        <0|x^4|0> = 3/4 and <4|x^4|0> = sqrt(24)/4 in the basis of p^2 + x^2.
        """
        self.assertAlmostEqual(self.h.band(0)[0], 1 + 0.75)
        self.assertAlmostEqual(self.h.band(4)[0], np.sqrt(24) / 4)
        self.assertAlmostEqual(self.h.band(2)[0], 3 * np.sqrt(2) / 2)

    def test_dense_symmetric(self):
        """
        The dense matrix is symmetric with odd bands empty.
        """
        dense = self.h.to_dense()
        np.testing.assert_array_equal(dense, dense.T)
        self.assertTrue(np.all(np.diag(dense, 1) == 0))
        self.assertTrue(np.all(np.diag(dense, 3) == 0))

    def test_parity_blocks(self):
        """
        The even block holds the ground state.
        """
        even, odd = self.h.parity_blocks()
        self.assertEqual(even.shape, (16, 16))
        full = np.linalg.eigvalsh(self.h.to_dense())
        self.assertAlmostEqual(np.linalg.eigvalsh(even)[0], full[0])
        self.assertAlmostEqual(np.linalg.eigvalsh(odd)[0], full[1])

    def test_invalid(self):
        """
        Tiny bases, negative couplings and frequencies are refused.
        """
        with self.assertRaises(ValueError):
            build_hamiltonian(1.0, 4)
        with self.assertRaises(ValueError):
            build_hamiltonian(-1.0, 16)
        with self.assertRaises(ValueError):
            build_hamiltonian(1.0, 16, omega=0.0)


class TestEigenvalues(unittest.TestCase):

    def test_harmonic(self):
        """
        Eigenvalues 1, 3, 5, 7 at g = 0.
        """
        values = lowest_eigenvalues(build_hamiltonian(0.0, 16), 4)
        np.testing.assert_allclose(values, [1, 3, 5, 7], atol=1e-12)

    def test_banded_matches_dense(self):
        """
        The banded solver agrees with a dense one.
        """
        h = build_hamiltonian(0.5, 64)
        dense = np.linalg.eigvalsh(h.to_dense())[:3]
        np.testing.assert_allclose(lowest_eigenvalues(h, 3), dense, atol=1e-9)

    def test_reference_values(self):
        """
        Known eigenvalues of p^2 + x^2 + g x^4.
        """
        self.assertAlmostEqual(exact_energies(1.0)[0], 1.392352, places=6)
        self.assertAlmostEqual(exact_energies(10.0)[0], 2.449174, places=6)
        self.assertAlmostEqual(exact_energies(100.0)[0], 4.999417, places=5)
        self.assertAlmostEqual(exact_energies(1.0, k=2)[1], 4.648813, places=6)

    def test_omega_invariance(self):
        """
        A converged eigenvalue does not depend on the basis frequency.
        """
        plain = exact_energies(0.1, omega=1.0)[0]
        scaled = exact_energies(0.1)[0]
        self.assertAlmostEqual(plain, scaled, places=8)

    def test_not_converged(self):
        """
        A basis of 8 states is too small at g = 10.
        """
        with self.assertRaises(NotConverged):
            lowest_eigenvalues(build_hamiltonian(10.0, 8), 1)

    def test_too_many_levels(self):
        """
        At most dim/4 eigenvalues are returned.
        """
        with self.assertRaises(ValueError):
            lowest_eigenvalues(build_hamiltonian(1.0, 16), 5)

    def test_variational_omega(self):
        """
        omega^3 - omega - 3g = 0 with omega = 1 at g = 0.
        """
        self.assertAlmostEqual(variational_omega(0.0), 1.0)
        omega = variational_omega(10.0)
        self.assertAlmostEqual(omega ** 3 - omega - 30.0, 0.0, places=9)

    def test_default_dim(self):
        """
        Basis size grows with the coupling.
        """
        self.assertEqual(default_dim(0.5), 64)
        self.assertEqual(default_dim(50), 128)
        self.assertEqual(default_dim(10000), 256)


if __name__ == "__main__":
    unittest.main()
