import pytest

from halfabelian import paperdata
from halfabelian.orbits import WeightedDiagram
from halfabelian.rootsys import SimpleType


@pytest.fixture(scope="session")
def table_rows():
    return paperdata.load_tables()


def row(rows, table_id, name):
    (r,) = [x for x in rows if x.table_id == table_id and x.orbit_name == name]
    return r


def diagram(stype: str, text: str) -> WeightedDiagram:
    return WeightedDiagram.parse(SimpleType.parse(stype), text)
