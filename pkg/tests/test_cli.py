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


import io
import os
import json
import shutil
import logging
import tempfile
import unittest
from unittest import mock

import numpy as np
import pandas as pd

from susypert.cli import main
from susypert.cli import EXIT_OK
from susypert.cli import EXIT_USAGE
from susypert.cli import EXIT_NO_ROOT
from susypert.cli import EXIT_TAIL
from susypert.cli import EXIT_VERIFY_FAILED
from susypert.rootfind import NoPositiveRoot

logging.basicConfig(level=logging.INFO)


def cur_path():
    pth, _ = os.path.split(os.path.abspath(__file__))
    return pth


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestEnergyCommand(unittest.TestCase):

    def test_ground_state(self):
        """
        n = 0, g = 1, N = 4 prints E=1.39017.
        """
        code, text = run_cli('energy', '--n', '0', '--g', '1', '--order', '4')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text.splitlines()[0], 'E=1.39017')

    def test_harmonic(self):
        """
        g = 0 prints E=1.00000.
        """
        code, text = run_cli('energy', '--n', '0', '--g', '0', '--order', '3')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text.splitlines()[0], 'E=1.00000')

    def test_json_golden(self):
        """
        JSON output matches the golden record.
        """
        code, text = run_cli('energy', '--n', '3', '--g', '1', '--order', '1', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        with open(os.path.join(cur_path(), 'test_data', 'energy_n3_g1_order1.json')) as fid:
            should = json.load(fid)
        self.assertEqual(json.loads(text), should)

    def test_csv(self):
        """
        CSV output has a header and one record.
        """
        code, text = run_cli('energy', '--n', '3', '--g', '1', '--order', '1', '--format', 'csv')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text.splitlines(), ['n,g,order,a_star,energy,half_width,roots',
                                             '3,1,1,2.00000,14.0000,0.000e+00,2.00000'])

    def test_polynomial(self):
        """
        --polynomial prints the monic constraint in E.
        """
        code, text = run_cli('energy', '--n', '0', '--g', '1', '--order', '1', '--polynomial')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('P(E)=1*E^3 - 1*E^1 - 3/2*E^0', text.splitlines())

    def test_no_positive_root(self):
        """
        A missing positive root exits with 2.
        """
        with mock.patch('susypert.cli.energy', side_effect=NoPositiveRoot("none")):
            code, _ = run_cli('energy', '--n', '0', '--g', '1', '--order', '2')
        self.assertEqual(code, EXIT_NO_ROOT)

    def test_root_rule(self):
        """
        --root real_part follows the leading complex pair at large even orders.
        """
        code, text = run_cli('energy', '--n', '0', '--g', '10', '--order', '10')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('E=2.01736', text)
        code, text = run_cli('energy', '--n', '0', '--g', '10', '--order', '10', '--root', 'real_part')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('E=2.43125', text)
        self.assertEqual(run_cli('energy', '--n', '0', '--g', '1', '--order', '2', '--root', 'x')[0], EXIT_USAGE)

    def test_usage_errors(self):
        """
        Missing flags, malformed and negative couplings exit with 1.
        """
        self.assertEqual(run_cli('energy', '--n', '0', '--g', '1')[0], EXIT_USAGE)
        self.assertEqual(run_cli('energy', '--n', '0', '--g', 'abc', '--order', '1')[0], EXIT_USAGE)
        self.assertEqual(run_cli('energy', '--n', '0', '--g', '-1', '--order', '1')[0], EXIT_USAGE)
        self.assertEqual(run_cli('energy', '--n', '0', '--g', '1', '--order', '0')[0], EXIT_USAGE)
        self.assertEqual(run_cli()[0], EXIT_USAGE)


class TestScanCommand(unittest.TestCase):

    def test_harmonic_scan(self):
        """
        Constant energies and the first order with zero amplitude.
        """
        code, text = run_cli('scan', '--n', '0', '--g', '0', '--from', '1', '--to', '4')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('best_order=2', text)
        self.assertEqual(text.count('1.00000'), 4)

    def test_json(self):
        """
        JSON scan rows.
        """
        code, text = run_cli('scan', '--n', '0', '--g', '0', '--from', '1', '--to', '3', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        result = json.loads(text)
        self.assertEqual(result['best_order'], 2)
        self.assertEqual([row['order'] for row in result['rows']], [1, 2, 3])

    def test_invalid_window(self):
        """
        from >= to exits with 1.
        """
        self.assertEqual(run_cli('scan', '--n', '0', '--g', '1', '--from', '4', '--to', '2')[0], EXIT_USAGE)


class TestVerifyCommand(unittest.TestCase):

    def test_table_1(self):
        """
        Table 1 passes apart from its two errata, which do not fail the run.
        """
        code, text = run_cli('verify', '--table', '1')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('# table 1: Lowest eigenvalue of the anharmonic oscillator (n = 0)', text)
        self.assertIn('table 1: 38/40 PASS, 2 ERRATUM', text)
        self.assertEqual(text.count('ERRATUM ('), 2)

    def test_tables_with_errata(self):
        """
        Tables 3 and 4 carry one erratum each and still exit with 0.
        """
        code, text = run_cli('verify', '--table', '3')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('table 3: 49/50 PASS, 1 ERRATUM', text)
        code, text = run_cli('verify', '--table', '4')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('table 4: 49/50 PASS, 1 ERRATUM', text)

    def test_large_order_tables(self):
        """
        Tables 5 and 6 pass in full.
        """
        for table_id in ('5', '6'):
            code, text = run_cli('verify', '--table', table_id)
            self.assertEqual(code, EXIT_OK)
            self.assertIn('table {}: 20/20 PASS'.format(table_id), text)

    def test_failure_exit(self):
        """
        A cell that does not match fails the run with 4.
        """
        with mock.patch('susypert.spectrum._status', return_value='FAIL'):
            code, _ = run_cli('verify', '--table', '5')
        self.assertEqual(code, EXIT_VERIFY_FAILED)

    def test_oracle(self):
        """
        The oracle line reports the exact value of table 5.
        """
        code, text = run_cli('verify', '--table', '5', '--oracle', 'on')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('exact 1.392352', text)

    def test_deterministic(self):
        """
        Worker processes do not change the output of all six tables.
        """
        serial = run_cli('verify', '--table', 'all', '--format', 'csv')
        parallel = run_cli('verify', '--table', 'all', '--format', 'csv', '--jobs', '2')
        self.assertEqual(serial[0], EXIT_OK)
        self.assertEqual(serial, parallel)
        self.assertEqual(serial[1].count('table_id,n,g,order,'), 6)
        self.assertEqual(serial[1].count(',ERRATUM,'), 4)
        self.assertEqual(serial[1].count(',PASS,'), 226)
        self.assertNotIn(',FAIL,', serial[1])

    def test_unknown_table(self):
        """
        Tables outside 1..6 are a usage error.
        """
        self.assertEqual(run_cli('verify', '--table', '7')[0], EXIT_USAGE)
        self.assertEqual(run_cli('verify', '--table', '1', '--significant', '6')[0], EXIT_USAGE)


class TestWavefunctionCommand(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_gaussian(self):
        """
        At g = 0 psi is exp(-x^2/2) / pi^(1/4).
        """
        filename = os.path.join(self.tmp, 'psi.csv')
        code, _ = run_cli('wavefunction', '--n', '0', '--g', '0', '--order', '1', '--xmax', '8',
                          '--points', '2001', '--out', filename)
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(filename)
        self.assertEqual(list(frame.columns), ['x', 'chi', 'phi', 'psi'])
        self.assertEqual(len(frame), 2001)
        should = np.exp(-frame['x'] ** 2 / 2) / np.pi ** 0.25
        np.testing.assert_allclose(frame['psi'], should, atol=1e-8)

    def test_first_excited(self):
        """
        n = 1 has its node at the origin.
        """
        code, text = run_cli('wavefunction', '--n', '1', '--g', '1', '--order', '1', '--points', '401')
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(io.StringIO(text))
        centre = frame['x'].abs().idxmin()
        self.assertLess(abs(frame['psi'][centre]), 1e-10)
        self.assertGreater(frame['psi'].abs().max(), 0.1)

    def test_residual_column(self):
        """
        --residual adds the local residual.
        """
        code, text = run_cli('wavefunction', '--n', '0', '--g', '1', '--order', '1', '--points', '101',
                             '--residual')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text.splitlines()[0], 'x,chi,phi,psi,residual')

    def test_tail_not_decayed(self):
        """
        A growing tail exits with 3.
        """
        code, _ = run_cli('wavefunction', '--n', '0', '--g', '1', '--order', '2')
        self.assertEqual(code, EXIT_TAIL)
        code, _ = run_cli('wavefunction', '--n', '0', '--g', '1', '--order', '8')
        self.assertEqual(code, EXIT_TAIL)


if __name__ == "__main__":
    unittest.main()
