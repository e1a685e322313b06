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
Eigenvalue estimates, convergence scans over the perturbation order and
reproduction of the reference tables.
"""

import logging
import warnings
from fractions import Fraction
from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor

import pandas as pd

from susypert.ratpoly import Poly
from susypert.ratpoly import to_rational
from susypert.ratpoly import render_exact
from susypert.ratpoly import render_fixed
from susypert.ratpoly import render_significant
from susypert.ratpoly import poly_normalize
from susypert.ratpoly import poly_compose_scale
from susypert.recursion import constraint
from susypert.rootfind import ROOT_LARGEST
from susypert.rootfind import NoPositiveRoot
from susypert.rootfind import positive_roots
from susypert.rootfind import select_root
from susypert.reference import load_reference
from susypert.oracle import NotConverged
from susypert.oracle import exact_energies

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 12
DEFAULT_SIGNIFICANT = 6

PASS = 'PASS'
FAIL = 'FAIL'
ERRATUM = 'ERRATUM'
NOT_CONVERGED = 'NOT_CONVERGED'

REPORT_COLUMNS = ['table_id', 'n', 'g', 'order', 'printed', 'computed', 'status', 'note']
ORACLE_COLUMNS = ['table_id', 'n', 'g', 'printed', 'oracle', 'delta', 'status', 'note']


@dataclass(frozen=True)
class OscillatorProblem:
    """
    One computation: state n, coupling g of V = x^2 + g x^4 and perturbation order N.
    """

    n: int
    g: Fraction
    order: int

    def __post_init__(self):
        object.__setattr__(self, 'g', to_rational(self.g))
        if self.n < 0:
            raise ValueError("The quantum number must not be negative: {}".format(self.n))
        if self.g < 0:
            raise ValueError("The coupling must not be negative: {}".format(self.g))
        if self.order < 1:
            raise ValueError("The perturbation order must be at least 1: {}".format(self.order))

    @property
    def g_text(self):
        return render_exact(self.g)

    @property
    def level_factor(self):
        """ 2n + 1, the ratio E / a. """
        return 2 * self.n + 1


@dataclass(frozen=True)
class EnergyEstimate:
    """
    Solved scale parameter and the energy E = 2 a* (n + 1/2) derived from it.
    """

    problem: OscillatorProblem
    a_star: object
    all_positive_roots: tuple

    @property
    def order(self):
        return self.problem.order

    @property
    def energy(self):
        return self.problem.level_factor * self.a_star.value

    @property
    def half_width(self):
        return self.problem.level_factor * self.a_star.half_width

    def render(self, significant=DEFAULT_SIGNIFICANT):
        return render_significant(self.energy, significant)

    def to_record(self, significant=DEFAULT_SIGNIFICANT):
        """
        Machine-readable record with the keys n, g, order, a_star, energy, half_width, roots.

        Returns
        -------
        dict
        """

        return {
            'n': self.problem.n,
            'g': self.problem.g_text,
            'order': self.order,
            'a_star': render_significant(self.a_star.value, significant),
            'energy': self.render(significant),
            'half_width': '{:.3e}'.format(float(self.half_width)),
            'roots': [render_significant(root.value, significant) for root in self.all_positive_roots],
        }


def energy(problem, digits=DEFAULT_DIGITS, cache=None, root_rule=ROOT_LARGEST):
    """
    Energy estimate of one state at one perturbation order.

    Parameters
    ----------
    problem : OscillatorProblem
        State, coupling and order.
    digits : int, optional
        Decimal digits of the root refinement (default: 12).
    cache : CoefficientCache, optional
        Cache for the coefficient tables.
    root_rule : str, optional
        ROOT_LARGEST (default) takes the largest positive real root of the
        constraint; ROOT_REAL_PART the real part of its root with the largest
        real part, which may belong to a complex-conjugate pair.

    Returns
    -------
    EnergyEstimate

    Raises
    ------
    NoPositiveRoot
        If the selected root is not positive.
    """

    poly = constraint(problem.n, problem.g, problem.order, cache=cache)
    roots = positive_roots(poly, digits)
    try:
        a_star = select_root(poly, root_rule, digits, real_roots=roots)
    except NoPositiveRoot:
        raise NoPositiveRoot("No positive root at n={} g={} N={}".format(problem.n, problem.g_text, problem.order))

    estimate = EnergyEstimate(problem, a_star, tuple(roots))
    logger.debug("n=%d g=%s N=%d: E=%s (%d positive roots)", problem.n, problem.g_text, problem.order,
                 estimate.render(), len(roots))

    return estimate


def energy_polynomial(n, g, order, cache=None):
    """
    Monic constraint polynomial in the energy variable E = (2n + 1) a.

    Returns
    -------
    Poly
        Polynomial in E whose largest positive root is the energy estimate.
    """

    poly = poly_compose_scale(constraint(n, g, order, cache=cache), Fraction(1, 2 * n + 1))
    return Poly(poly_normalize(poly).coeffs, var='E')


@dataclass(frozen=True)
class ConvergenceScan:
    """
    Energies over a window of perturbation orders.

    energies holds None where an order has no positive root. amplitudes[k] is
    |E(N_k) - E(N_k - 1)| and is None unless both orders succeeded.
    """

    n: int
    g: Fraction
    orders: tuple
    energies: tuple
    amplitudes: tuple
    best_order: object

    @property
    def signed_differences(self):
        """ E(N) - E(N-1), None where either order is missing. """
        differences = [None]
        for previous, current in zip(self.energies, self.energies[1:]):
            if previous is None or current is None:
                differences.append(None)
            else:
                differences.append(current.energy - previous.energy)
        return differences

    def to_frame(self, significant=DEFAULT_SIGNIFICANT):
        """
        Scan as a table with one row per order.

        Returns
        -------
        pandas.DataFrame
            Columns order, energy, amplitude (text, empty where undefined).
        """

        rows = []
        for order, estimate, amplitude in zip(self.orders, self.energies, self.amplitudes):
            rows.append({'order': order,
                         'energy': '' if estimate is None else estimate.render(significant),
                         'amplitude': '' if amplitude is None else '{:.3e}'.format(float(amplitude))})

        return pd.DataFrame(rows, columns=['order', 'energy', 'amplitude'])


def scan(n, g, order_from, order_to, digits=DEFAULT_DIGITS, cache=None, root_rule=ROOT_LARGEST):
    """
    Energies at every order of a window, their oscillation amplitudes and the
    order with the smallest amplitude.

    Parameters
    ----------
    n : int
        Quantum number.
    g : Fraction, int or str
        Quartic coupling.
    order_from, order_to : int
        Window of orders, 1 <= order_from < order_to.
    digits : int, optional
        Decimal digits of the root refinement (default: 12).
    cache : CoefficientCache, optional
        Cache for the coefficient tables.
    root_rule : str, optional
        Root selection, see energy (default: largest positive real root).

    Returns
    -------
    ConvergenceScan

    Raises
    ------
    NoPositiveRoot
        Only if no order of the window has a positive root.
    """

    if not 1 <= order_from < order_to:
        raise ValueError("Need 1 <= from < to, got {} and {}".format(order_from, order_to))

    g = to_rational(g)
    orders = tuple(range(order_from, order_to + 1))
    energies = []
    for order in orders:
        try:
            energies.append(energy(OscillatorProblem(n, g, order), digits, cache=cache, root_rule=root_rule))
        except NoPositiveRoot as err:
            warnings.warn("scan(): {}; recording a gap.".format(err))
            energies.append(None)

    if all(estimate is None for estimate in energies):
        raise NoPositiveRoot("No order in {}..{} has a positive root (n={}, g={}).".format(
            order_from, order_to, n, render_exact(g)))

    amplitudes = [None]
    for previous, current in zip(energies, energies[1:]):
        if previous is None or current is None:
            amplitudes.append(None)
        else:
            amplitudes.append(abs(current.energy - previous.energy))

    candidates = [(amplitude, order) for order, amplitude in zip(orders, amplitudes) if amplitude is not None]
    best_order = min(candidates)[1] if candidates else None

    return ConvergenceScan(n, g, orders, tuple(energies), tuple(amplitudes), best_order)


def _status(matched, cell):
    if matched:
        return PASS
    if cell.erratum:
        logger.info("Table %d n=%d g=%s %s: %s", cell.table_id, cell.n, cell.g_text, cell.column, cell.erratum)
        return ERRATUM
    return FAIL


def _cell_energy(args):
    n, g, order, digits, root_rule = args
    try:
        return energy(OscillatorProblem(n, g, order), digits, root_rule=root_rule).energy
    except NoPositiveRoot:
        return None


def _map(function, items, jobs):
    if jobs is not None and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(function, items))
    return [function(item) for item in items]


def reproduce_table(table_id, digits=DEFAULT_DIGITS, jobs=1, dataset=None):
    """
    Recomputes every perturbation-order cell of a reference table.

    A cell passes if the computed energy is within one unit of the last printed
    digit. Each cell is solved with its own root rule. A miss on a cell with a
    recorded erratum is reported as ERRATUM with the reason in the note column;
    only FAIL marks a regression.

    Parameters
    ----------
    table_id : int
        Table number 1..6.
    digits : int, optional
        Decimal digits of the root refinement (default: 12).
    jobs : int, optional
        Worker processes (default: 1); the row order does not depend on it.
    dataset : ReferenceDataset, optional
        Reference tables (default: the shipped ones).

    Returns
    -------
    pandas.DataFrame
        Columns table_id, n, g, order, printed, computed, status, note.
    """

    dataset = load_reference() if dataset is None else dataset
    cells = dataset.cells(table_id)
    computed = _map(_cell_energy, [(c.n, c.g, c.order, digits, c.root_rule) for c in cells], jobs)

    rows = []
    for cell, value in zip(cells, computed):
        text = '' if value is None else render_fixed(value, cell.places)
        matched = value is not None and abs(value - cell.value) <= cell.tolerance
        status = _status(matched, cell)
        if status == FAIL:
            warnings.warn("Table {} n={} g={} N={}: computed '{}' vs printed '{}'".format(
                table_id, cell.n, cell.g_text, cell.order, text, cell.value_text))
        rows.append({'table_id': table_id, 'n': cell.n, 'g': cell.g_text, 'order': cell.order,
                     'printed': cell.value_text, 'computed': text, 'status': status,
                     'note': cell.erratum if status == ERRATUM else ''})

    report = pd.DataFrame(rows, columns=REPORT_COLUMNS)
    logger.info("Table %d: %d/%d cells pass, %d erratum", table_id, (report['status'] == PASS).sum(),
                len(report), (report['status'] == ERRATUM).sum())

    return report


def oracle_report(table_id, dataset=None):
    """
    Compares the exact column of a table with the diagonalisation oracle.

    Returns
    -------
    pandas.DataFrame
        Columns table_id, n, g, printed, oracle, delta, status, note.
    """

    dataset = load_reference() if dataset is None else dataset
    rows = []
    for cell in dataset.cells(table_id, exact=True):
        try:
            value = exact_energies(cell.g, k=cell.n + 1)[cell.n]
        except NotConverged as err:
            warnings.warn("Table {} n={} g={}: {}".format(table_id, cell.n, cell.g_text, err))
            rows.append({'table_id': table_id, 'n': cell.n, 'g': cell.g_text, 'printed': cell.value_text,
                         'oracle': '', 'delta': '', 'status': NOT_CONVERGED, 'note': str(err)})
            continue

        delta = value - float(cell.value)
        status = _status(abs(delta) <= float(cell.tolerance) * (1 + 1e-9), cell)
        if status == FAIL:
            warnings.warn("Table {} n={} g={}: oracle {:.8f} vs printed exact {}".format(
                table_id, cell.n, cell.g_text, value, cell.value_text))
        rows.append({'table_id': table_id, 'n': cell.n, 'g': cell.g_text, 'printed': cell.value_text,
                     'oracle': '{:.{}f}'.format(value, cell.places), 'delta': '{:+.2e}'.format(delta),
                     'status': status, 'note': cell.erratum if status == ERRATUM else ''})

    return pd.DataFrame(rows, columns=ORACLE_COLUMNS)
