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
Reference eigenvalue tables shipped with the package.

Each record holds one printed cell: table, quantum number, coupling and
column exactly as printed, where the column is a perturbation order or
"exact" for the numerically exact eigenvalue. Optional columns name the root
rule the printed value follows and, for cells the method cannot reproduce,
the reason (erratum).
"""

from fractions import Fraction
from dataclasses import dataclass

import pandas as pd
import pkg_resources

from susypert.ratpoly import parse_decimal
from susypert.rootfind import ROOT_LARGEST

DATA_FILE = 'data/reference_tables.tsv'
EXACT = 'exact'
OPTIONAL_COLUMNS = ('root_rule', 'erratum')

TABLE_CAPTIONS = {
    1: "Lowest eigenvalue of the anharmonic oscillator (n = 0)",
    2: "First excited state energies of the anharmonic oscillator (n = 1)",
    3: "Second excited state energies of the anharmonic oscillator (n = 2)",
    4: "Third excited state energies of the anharmonic oscillator (n = 3)",
    5: "Lowest eigenvalues calculated for g = 1 at large orders",
    6: "Lowest eigenvalues calculated for g = 10 at large orders",
}


def printed_places(text):
    """ Number of digits after the decimal point of a printed number. """
    return len(text.split('.')[1]) if '.' in text else 0


@dataclass(frozen=True)
class ReferenceCell:
    """
    One printed table cell.
    """

    table_id: int
    n: int
    g_text: str
    column: str
    value_text: str
    root_rule: str = ROOT_LARGEST
    erratum: str = ''

    @property
    def g(self):
        return parse_decimal(self.g_text)

    @property
    def is_exact(self):
        return self.column == EXACT

    @property
    def order(self):
        """ Perturbation order, None for the exact column. """
        return None if self.is_exact else int(self.column)

    @property
    def value(self):
        return parse_decimal(self.value_text)

    @property
    def places(self):
        return printed_places(self.value_text)

    @property
    def tolerance(self):
        """ One unit in the last printed digit. """
        return Fraction(1, 10 ** self.places)


class ReferenceDataset(object):
    """
    The printed reference tables, loaded from the tab-separated data file.
    """

    def __init__(self, frame):
        """
        Constructor of ReferenceDataset class.

        Parameters
        ----------
        frame : pandas.DataFrame
            Records with columns table_id, n, g, column, value, root_rule, erratum
            (all as text).
        """

        self.frame = frame

    @classmethod
    def from_file(cls, path=None):
        """
        Reads the dataset; by default the copy shipped inside the package.

        Parameters
        ----------
        path : str, optional
            Tab-separated file with the reference records.

        Returns
        -------
        ReferenceDataset
        """

        if path is None:
            path = pkg_resources.resource_filename('susypert', DATA_FILE)
        frame = pd.read_csv(path, sep='\t', dtype=str, comment='#', keep_default_na=False)
        for column in OPTIONAL_COLUMNS:
            if column not in frame.columns:
                frame[column] = ''
        frame['table_id'] = frame['table_id'].astype(int)
        frame['n'] = frame['n'].astype(int)

        return cls(frame)

    @property
    def table_ids(self):
        return sorted(self.frame['table_id'].unique().tolist())

    def cells(self, table_id, exact=False):
        """
        Cells of one table in file order.

        Parameters
        ----------
        table_id : int
            Table number.
        exact : bool, optional
            If True, only the exact column is returned, else only the order columns (default: False).

        Returns
        -------
        list of ReferenceCell
        """

        if table_id not in TABLE_CAPTIONS:
            raise KeyError("Unknown table: {}".format(table_id))

        rows = self.frame[self.frame['table_id'] == table_id]
        rows = rows[(rows['column'] == EXACT) == exact]

        return [ReferenceCell(int(row.table_id), int(row.n), row.g, row.column, row.value,
                              row.root_rule or ROOT_LARGEST, row.erratum)
                for row in rows.itertuples(index=False)]


_dataset = None


def load_reference():
    """ The shipped reference dataset, read once per process. """

    global _dataset
    if _dataset is None:
        _dataset = ReferenceDataset.from_file()
    return _dataset
