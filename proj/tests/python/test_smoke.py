import json

import pytest

import nucleus


def partition_counts(limit, smallest=1, avoid=None):
    """Coin-change count of partitions using parts >= smallest, skipping avoid."""
    counts = [1] + [0] * limit
    for part in range(smallest, limit + 1):
        if part == avoid:
            continue
        for total in range(part, limit + 1):
            counts[total] += counts[total - part]
    return counts


def test_reference_rows():
    rows = {n: (g, v, p) for n, g, v, p in nucleus.table(100)}
    assert rows[12] == (7, 21, 77)
    assert rows[17] == (11, 66, 297)
    assert rows[20] == (32, 137, 627)
    assert rows[100] == (2307678, 21339417, 190569292)


def test_big_values_are_python_ints():
    expected = partition_counts(600)
    assert nucleus.p(600) == expected[600]
    assert nucleus.p(600) > 2**64
    assert nucleus.nu(500) == expected[500] - expected[499]


def test_nuclear_counts_against_brute_force():
    nuclear = partition_counts(30, smallest=2)
    for n in range(31):
        assert nucleus.nu(n) == nuclear[n]
        assert sum(1 for _ in nucleus.nuclear_partitions(n)) == nuclear[n]
    assert nucleus.nu_k(9, 5) == partition_counts(9, avoid=5)[9] == 25


def test_partition_stream_is_lazy_and_ordered():
    stream = nucleus.partitions(6, min_part=2)
    assert next(stream) == (6,)
    assert list(stream) == [(4, 2), (3, 3), (2, 2, 2)]
    assert list(nucleus.partitions(0, min_part=5)) == [()]
    big = nucleus.partitions(100, min_part=2)
    assert next(big) == (100,)
    assert next(big) == (98, 2)
    with pytest.raises(ValueError):
        nucleus.partitions(5, min_part=0)


def test_fuse_and_decay():
    assert nucleus.decay_chain((5, 2)) == [(4, 2, 1), (3, 2, 1, 1), (2, 2, 1, 1, 1)]
    assert nucleus.fuse((3, 2, 1, 1)) == (5, 2)
    assert nucleus.decay_capacity((6,)) == 5
    assert nucleus.is_ground_state((3, 3))
    assert not nucleus.is_nuclear((3, 2, 1))
    with pytest.raises(ValueError):
        nucleus.fuse((5, 2))
    with pytest.raises(ValueError):
        nucleus.decay_step((5, 2), 4)


def test_enumeration_formula_and_corrected_forms():
    b = nucleus.theorem1(6)
    assert (b["nuclear_count"], b["gap_sum"], b["value"]) == (4, 2, 11)
    with pytest.raises(ValueError):
        nucleus.theorem1(1)
    assert nucleus.bounded_sum(6) == (3, 4)
    assert nucleus.k_nuclear(6, 2) == (6, 11)


def test_congruences_and_parity():
    for m in (5, 7, 11):
        assert nucleus.check_congruence("nu_window", m, 100)["holds"]
        assert nucleus.check_congruence("gamma_weighted", m, 100)["holds"]
    report = nucleus.check_custom(2, 0, 3, 20)
    assert not report["holds"]
    assert report["violations"][0] == {"n": 0, "residue": 1}
    assert nucleus.parity_via_gamma(20) == 1
    assert nucleus.p_mod_m(20, 2)[20] == 1


def test_verify_summary():
    summary = nucleus.verify(100, 15)
    assert summary["passed"]
    statuses = {row["name"]: row["status"] for row in summary["identities"]}
    assert statuses["bounded_sum_printed"] == "expected-fail"
    assert statuses["theorem1"] == "pass"


def test_estimates():
    assert 0.9 <= nucleus.hr_p(100) / 190569292 <= 1.1
    assert nucleus.hr_gamma(100) > 0
    assert abs(nucleus.hr_nu(100, simplified=True) / nucleus.hr_nu(100) - 1) < 0.07


def test_cli_in_process(tmp_path):
    code, out, err = nucleus.run_cli(["table", "--rows", "100", "--format", "json"])
    assert code == 0 and err == ""
    assert json.loads(out)["rows"][0]["p"] == "190569292"
    cache = tmp_path / "values.csv"
    assert nucleus.run_cli(["table", "--limit", "60", "--cache", str(cache)])[0] == 0
    text = cache.read_text().replace("\n50,", "\n50,9", 1)
    cache.write_text(text)
    code, _, err = nucleus.run_cli(["verify", "--limit", "60", "--enum-limit", "5", "--cache", str(cache)])
    assert code == 3
    assert "row 50" in err
    assert nucleus.run_cli(["decay", "3,2,1"])[0] == 2
