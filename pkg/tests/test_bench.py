import csv
import io

import pytest

from foldgray.bench import CSV_HEADER, count_ops, run_bench, write_csv


@pytest.mark.parametrize("n, kind, algo, expected", [
    (10, "stamp", "recursive", 14060),
    (10, "semi", "iterative", 4210),
    (1, "stamp", "recursive", 1),
    (1, "semi", "iterative", 1),
])
def test_run_bench_counts(n, kind, algo, expected):
    (record,) = run_bench([n], kind, algo, repetitions=1)
    assert record.count == expected
    assert record.ops.emissions == expected


def test_csv_output():
    records = run_bench(range(3, 6), "semi", "recursive", repetitions=2)
    buf = io.StringIO()
    write_csv(records, buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[0] == CSV_HEADER == ("n,kind,algorithm,count,wall_ns,ns_per_string,"
                                     "rotations,scans,splices,nsm_calls").split(",")
    assert [int(r[3]) for r in rows[1:]] == [4, 10, 24]


def test_every_new_pile_costs_at_least_one_rotation():
    for algo in ("recursive", "iterative"):
        for kind in ("stamp", "semi"):
            count, ops = count_ops(9, kind, algo)
            assert ops.rotations >= count - 1
            assert ops.emissions == count
