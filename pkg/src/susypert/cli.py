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
Command line interface: ``susypert energy|scan|verify|wavefunction``.

Exit codes: 0 success, 1 usage or invalid argument, 2 no positive root,
3 wavefunction tail not decayed, 4 a table cell failed verification. Cells
with a recorded erratum are reported as ERRATUM and do not fail.
"""

import sys
import json
import logging
import argparse

from susypert import __version__
from susypert.ratpoly import SusyPertError
from susypert.ratpoly import parse_decimal
from susypert.ratpoly import render_exact
from susypert.rootfind import ROOT_LARGEST
from susypert.rootfind import ROOT_RULES
from susypert.rootfind import NoPositiveRoot
from susypert.reference import TABLE_CAPTIONS
from susypert.reference import load_reference
from susypert.spectrum import DEFAULT_DIGITS
from susypert.spectrum import DEFAULT_SIGNIFICANT
from susypert.spectrum import FAIL
from susypert.spectrum import PASS
from susypert.spectrum import ERRATUM
from susypert.spectrum import OscillatorProblem
from susypert.spectrum import energy
from susypert.spectrum import energy_polynomial
from susypert.spectrum import scan
from susypert.spectrum import reproduce_table
from susypert.spectrum import oracle_report
from susypert.wavefn import DEFAULT_POINTS
from susypert.wavefn import TailNotDecayed
from susypert.wavefn import build_model
from susypert.wavefn import normalize
from susypert.wavefn import grid_frame

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_ROOT = 2
EXIT_TAIL = 3
EXIT_VERIFY_FAILED = 4

FORMATS = ('human', 'json', 'csv')


def _write(text, out):
    out.write(text if text.endswith('\n') else text + '\n')


def cmd_energy(args, out):
    problem = OscillatorProblem(args.n, args.g, args.order)
    estimate = energy(problem, args.digits, root_rule=args.root)
    record = estimate.to_record(args.significant)

    if args.format == 'json':
        if args.polynomial:
            record['polynomial'] = str(energy_polynomial(args.n, args.g, args.order))
        _write(json.dumps(record, indent=2), out)
    elif args.format == 'csv':
        _write('n,g,order,a_star,energy,half_width,roots', out)
        _write(','.join([str(record['n']), record['g'], str(record['order']), record['a_star'],
                         record['energy'], record['half_width'], ';'.join(record['roots'])]), out)
    else:
        _write('E={}'.format(record['energy']), out)
        _write('a*={}'.format(record['a_star']), out)
        _write('half_width={}'.format(record['half_width']), out)
        _write('roots={}'.format(' '.join(record['roots'])), out)
        if args.polynomial:
            _write('P(E)={}'.format(energy_polynomial(args.n, args.g, args.order)), out)

    return EXIT_OK


def cmd_scan(args, out):
    result = scan(args.n, args.g, args.order_from, args.order_to, args.digits, root_rule=args.root)
    frame = result.to_frame(args.significant)

    if args.format == 'json':
        _write(json.dumps({'n': args.n, 'g': render_exact(args.g), 'best_order': result.best_order,
                           'rows': frame.to_dict(orient='records')}, indent=2, default=int), out)
    elif args.format == 'csv':
        _write(frame.to_csv(index=False), out)
    else:
        _write(frame.to_string(index=False), out)
        _write('best_order={}'.format(result.best_order), out)

    return EXIT_OK


def _table_ids(choice):
    if choice == 'all':
        return load_reference().table_ids
    return [int(choice)]


def _with_note(line, note):
    return '{} ({})'.format(line, note) if note else line


def _summary(table_id, report):
    passed = int((report['status'] == PASS).sum())
    errata = int((report['status'] == ERRATUM).sum())
    line = 'table {}: {}/{} PASS'.format(table_id, passed, len(report))
    return line + ', {} ERRATUM'.format(errata) if errata else line


def cmd_verify(args, out):
    reports = [reproduce_table(table_id, args.digits, jobs=args.jobs) for table_id in _table_ids(args.table)]
    oracles = [oracle_report(table_id) for table_id in _table_ids(args.table)] if args.oracle == 'on' else []
    failed = sum(int((report['status'] == FAIL).sum()) for report in reports)

    if args.format == 'json':
        _write(json.dumps({'cells': [row for report in reports for row in report.to_dict(orient='records')],
                           'oracle': [row for report in oracles for row in report.to_dict(orient='records')],
                           'failed': failed}, indent=2, default=int), out)
    elif args.format == 'csv':
        for report in reports + oracles:
            _write(report.to_csv(index=False), out)
    else:
        for report in reports:
            table_id = int(report['table_id'].iloc[0])
            _write('# table {}: {}'.format(table_id, TABLE_CAPTIONS[table_id]), out)
            for row in report.itertuples(index=False):
                line = 'table {} n={} g={} N={} printed {} computed {} {}'.format(
                    row.table_id, row.n, row.g, row.order, row.printed, row.computed or '-', row.status)
                _write(_with_note(line, row.note), out)
            _write(_summary(table_id, report), out)
        for report in oracles:
            for row in report.itertuples(index=False):
                line = 'table {} n={} g={} exact {} oracle {} delta {} {}'.format(
                    row.table_id, row.n, row.g, row.printed, row.oracle or '-', row.delta or '-', row.status)
                _write(_with_note(line, row.note), out)

    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_wavefunction(args, out):
    problem = OscillatorProblem(args.n, args.g, args.order)
    model = normalize(build_model(energy(problem, args.digits, root_rule=args.root)), args.xmax, args.points)
    frame = grid_frame(model, args.xmax, args.points, g=args.g if args.residual else None)

    if args.out == '-':
        frame.to_csv(out, index=False, float_format='%.12e')
    else:
        frame.to_csv(args.out, index=False, float_format='%.12e')
        logger.info("Wrote %d grid points to %s", len(frame), args.out)

    return EXIT_OK


def _decimal(text):
    try:
        return parse_decimal(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _add_problem_arguments(parser, order=True):
    parser.add_argument('--n', type=int, required=True, help="quantum number (>= 0)")
    parser.add_argument('--g', type=_decimal, required=True, help="quartic coupling as exact decimal, e.g. 0.001")
    if order:
        parser.add_argument('--order', type=int, required=True, help="perturbation order N (>= 1)")
    parser.add_argument('--digits', type=int, default=DEFAULT_DIGITS,
                        help="decimal digits of the root refinement (default: %(default)s)")
    parser.add_argument('--root', choices=ROOT_RULES, default=ROOT_LARGEST,
                        help="root selection rule (default: %(default)s)")


def _add_format_argument(parser, significant=True):
    parser.add_argument('--format', choices=FORMATS, default='human', help="output format (default: human)")
    if significant:
        parser.add_argument('--significant', type=int, default=DEFAULT_SIGNIFICANT,
                            help="significant digits of energies (default: %(default)s)")


def build_parser():
    """
    Argument parser with the four subcommands.

    Returns
    -------
    argparse.ArgumentParser
    """

    parser = argparse.ArgumentParser(prog='susypert',
                                     description="Superpotential perturbation energies of p^2 + x^2 + g x^4.")
    parser.add_argument('--version', action='version', version='%(prog)s {}'.format(__version__))
    parser.add_argument('-v', '--verbose', action='count', default=0, help="more log output on stderr (-v, -vv)")
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    sub = commands.add_parser('energy', help="energy of one state at one order")
    _add_problem_arguments(sub)
    _add_format_argument(sub)
    sub.add_argument('--polynomial', action='store_true', help="also print the monic constraint polynomial in E")
    sub.set_defaults(func=cmd_energy)

    sub = commands.add_parser('scan', help="energies over a window of orders")
    _add_problem_arguments(sub, order=False)
    sub.add_argument('--from', dest='order_from', type=int, required=True, help="first order")
    sub.add_argument('--to', dest='order_to', type=int, required=True, help="last order")
    _add_format_argument(sub)
    sub.set_defaults(func=cmd_scan)

    sub = commands.add_parser('verify', help="recompute the reference tables")
    sub.add_argument('--table', choices=['1', '2', '3', '4', '5', '6', 'all'], default='all',
                     help="table to verify (default: all)")
    sub.add_argument('--oracle', choices=['on', 'off'], default='off',
                     help="compare the exact columns with matrix diagonalisation (default: off)")
    sub.add_argument('--digits', type=int, default=DEFAULT_DIGITS,
                     help="decimal digits of the root refinement (default: %(default)s)")
    sub.add_argument('--jobs', type=int, default=1, help="worker processes (default: 1)")
    _add_format_argument(sub, significant=False)
    sub.set_defaults(func=cmd_verify)

    sub = commands.add_parser('wavefunction', help="normalised wavefunction on a grid as CSV")
    _add_problem_arguments(sub)
    sub.add_argument('--xmax', type=float, default=None, help="grid half-width (default: 10/sqrt(a*))")
    sub.add_argument('--points', type=int, default=DEFAULT_POINTS, help="odd number of grid points (default: 4001)")
    sub.add_argument('--out', default='-', help="output CSV file (default: stdout)")
    sub.add_argument('--residual', action='store_true', help="add the local Schroedinger residual column")
    sub.set_defaults(func=cmd_wavefunction)

    return parser


def setup_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(argv=None, out=None):
    """
    Runs the command line.

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name (default: sys.argv[1:]).
    out : file-like, optional
        Stream for the results (default: sys.stdout).

    Returns
    -------
    int
        Exit code.
    """

    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code == 0 else EXIT_USAGE

    setup_logging(args.verbose)

    try:
        return args.func(args, out)
    except NoPositiveRoot as err:
        sys.stderr.write("susypert: {}\n".format(err))
        return EXIT_NO_ROOT
    except TailNotDecayed as err:
        sys.stderr.write("susypert: {}; raise --xmax or lower the order.\n".format(err))
        return EXIT_TAIL
    except (ValueError, KeyError, SusyPertError) as err:
        sys.stderr.write("susypert: {}\n".format(err))
        return EXIT_USAGE


def run():
    """ Entry point of the console script. """
    sys.exit(main())


if __name__ == '__main__':
    run()
