"""Full CLI runs: documents on disk in, JSON lines out."""

import json

import pytest

from artin_homology.main import main

pytestmark = pytest.mark.integration


def run(capsys, *argv) -> tuple[int, list[dict]]:
    code = main(list(argv) + ["--format", "json-lines"])
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.strip()]


@pytest.fixture
def matrix_file(tmp_path):
    path = tmp_path / "square.cox"
    path.write_text("# four generators, two infinite pairs\nn=4\n1 2 4\n2 3 6\n3 4 2\n1 4 8\n")
    return path


def test_validate_canonical_form_round_trips(capsys, matrix_file, tmp_path):
    code, [record] = run(capsys, "validate", "--input", str(matrix_file))

    assert code == 0
    assert record["B"] == [[1, 2], [1, 4], [2, 3], [3, 4]]
    assert record["right_angled"] is False

    again = tmp_path / "canonical.cox"
    again.write_text(record["canonical"])
    _, [second] = run(capsys, "validate", "--input", str(again))
    assert second["canonical"] == record["canonical"]


def test_every_command_agrees_on_b(capsys, matrix_file):
    _, [h2] = run(capsys, "h2", "-i", str(matrix_file))
    _, [cup] = run(capsys, "cup", "-i", str(matrix_file))
    _, [pont] = run(capsys, "pontryagin", "-i", str(matrix_file))

    pairs = [[e["i"], e["j"]] for e in h2["elements"]]
    assert pairs == pont["B"]
    assert [[e["i"], e["j"]] for e in cup["entries"] if e["coeff"]] == pairs
    assert cup["cokernel"]["text"] == "Z/2 x Z/12"


def test_class_of_relator_product_file(capsys, matrix_file, tmp_path):
    factors = tmp_path / "product.txt"
    factors.write_text(
        "pair=(1,2) exp=+1 conj=a3 a4^-1\n"
        "pair=(2,3) exp=-1 conj=a1\n"
        "pair=(1,2) exp=+1\n"
        "pair=(3,4) exp=-1 conj=a2 a2\n"
    )

    code, [record] = run(capsys, "class", str(factors), "-i", str(matrix_file))

    assert code == 0
    assert record["coords"] == [2, 0, -1, -1]
    assert record["agrees"] is True


def test_verify_reports_every_check(capsys, matrix_file):
    code, records = run(capsys, "verify", "-i", str(matrix_file), "--seed", "1")
    summary = records[-1]

    assert code == 0
    assert summary["kind"] == "verify"
    assert summary["failed"] == 0
    assert len(records) - 1 == summary["passed"] + summary["skipped"]
    skipped = [r for r in records if r.get("status") == "skipped"]
    assert all(r["detail"] == "infinite group: some label is inf" for r in skipped)


def test_oracle_on_product_spec(capsys):
    code, [record] = run(capsys, "oracle-h2", "--group-spec", "product:dihedral:1,elementary:1")

    assert code == 0
    assert record["order"] == 8
    assert record["h2"]["text"] == "Z/2 x Z/2 x Z/2"
    assert record["h2_f2_rank"] == 3


def test_oracle_enumerates_matrix(capsys):
    code, [record] = run(capsys, "oracle-h2", "-m", "n=2; 1 2 6")

    assert code == 0
    assert record["order"] == 12
    assert record["h1"]["text"] == "Z/2 x Z/2"
