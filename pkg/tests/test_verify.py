import json
import random

import pytest

from foldgray.common import GenConfig
from foldgray.iterative import listing_iterative
from foldgray.pile import Pile, PileError, StampRotation, apply_rotation
from foldgray.recursive import listing_recursive
from foldgray.verify import find_stamp_rotation, verify_listing

P = Pile.parse


def exhaustive_rotation(a, b):
    n = a.n
    for k in range(1, n + 1):
        for i in range(k + 1, n + 1):
            for j in range(i, n + 1):
                rot = StampRotation(i, j, k)
                if apply_rotation(a, rot) == b:
                    return rot
    return None


def test_find_stamp_rotation_examples():
    assert find_stamp_rotation(P("6345127"), P("6512347")) == StampRotation(4, 6, 2)
    assert find_stamp_rotation(P("1234"), P("1234")) is None
    assert find_stamp_rotation(P("2134"), P("1234")) == StampRotation(2, 2, 1)
    assert exhaustive_rotation(P("2134"), P("1234")) == StampRotation(2, 2, 1)
    with pytest.raises(PileError):
        find_stamp_rotation(P("123"), P("1234"))


@pytest.mark.parametrize("n", range(1, 8))
def test_find_stamp_rotation_agrees_with_exhaustive_scan(n):
    rng = random.Random(n)
    base = list(range(1, n + 1))
    for _ in range(300):
        a = Pile(rng.sample(base, n))
        if rng.random() < 0.5 and n > 1:
            k = rng.randint(1, n - 1)
            i = rng.randint(k + 1, n)
            b = apply_rotation(a, StampRotation(i, rng.randint(i, n), k))
        else:
            b = Pile(rng.sample(base, n))
        assert find_stamp_rotation(a, b) == exhaustive_rotation(a, b)


@pytest.mark.parametrize("listing", [listing_recursive, listing_iterative])
@pytest.mark.parametrize("kind", ["stamp", "semi"])
@pytest.mark.parametrize("n", range(1, 9))
def test_generated_listings_certify(listing, kind, n):
    report = verify_listing(listing(GenConfig(n, kind)), kind)
    assert report.ok, report.witness_failures[:3]


def test_semi_five_report():
    report = verify_listing(listing_recursive(GenConfig(5, "semi")), "semi")
    assert report.ok and report.count == 24


def test_non_adjacent_pair_reported():
    report = verify_listing([P("1234"), P("4321")], "stamp")
    assert not report.all_adjacent and not report.cyclic
    assert any(reason == "no stamp rotation" for _, _, reason in report.witness_failures)
    assert not report.ok


def test_single_pile_listing():
    report = verify_listing([P("1")], "stamp")
    assert report.ok and report.count == 1 and report.cyclic


def test_duplicate_and_missing_detected():
    good = listing_recursive(GenConfig(5, "semi"))
    dup = good[:3] + [good[2]] + good[3:]
    report = verify_listing(dup, "semi")
    assert not report.all_adjacent and not report.ok
    reasons = {reason for _, _, reason in report.witness_failures}
    assert "duplicate pile" in reasons

    short = good[:-2] + good[-1:]
    report = verify_listing(short, "semi")
    assert any("missing" in reason for _, _, reason in report.witness_failures)


def test_invalid_pile_and_endpoints():
    report = verify_listing([P("1234"), P("2341"), P("1423")], "stamp")
    assert not report.all_valid and not report.first_last_ok


def test_report_json_fields():
    doc = json.loads(verify_listing([P("12"), P("21")], "semi").to_json())
    assert set(doc) == {"n", "kind", "count", "all_valid", "all_adjacent", "cyclic",
                        "first_last_ok", "witness_failures"}
    assert doc["count"] == 2 and doc["all_adjacent"]
