import json

import pytest

from reflektor.cli import main, _parse_word, _parse_eq, _parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_upoly_u(capsys):
    code, out = run(capsys, "upoly", "u", "5")
    assert code == 0
    assert out.strip() == "X^2 - 3*X + 1"


def test_upoly_v(capsys):
    code, out = run(capsys, "upoly", "v", "6")
    assert code == 0
    assert out.strip() == "X - 3"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["upoly", "w", "5"])
    assert exc.value.code == 2


def test_verify_unknown_suite(capsys):
    assert main(["verify", "bogus"]) == 2


def test_verify_suite_text(capsys):
    code, out = run(capsys, "verify", "s1_classification")
    assert code == 0
    assert "s1_classification" in out
    assert "0 failed" in out


def test_verify_json_schema(capsys):
    code, out = run(capsys, "verify", "s3_cor9", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["suite_id"] == "s3_cor9"
    assert payload[0]["artifact_version"] == 1
    statuses = {c["status"] for c in payload[0]["cases"]}
    assert statuses <= {"pass", "fail", "skipped"}
    assert all(c["status"] == "pass" for c in payload[0]["cases"])


def test_verify_quick_profile_skips_large_groups(capsys):
    code, out = run(capsys, "verify", "s3_h4", "--profile", "quick",
                    "--json")
    assert code == 0
    payload = json.loads(out)
    assert all(c["status"] == "skipped" for c in payload[0]["cases"])


def test_verify_identities_range(capsys):
    code, out = run(capsys, "verify", "identities", "--range", "-5..5")
    assert code == 0


def test_field_root_of_v(capsys):
    code, out = run(capsys, "field", "root-of-v", "5", "1")
    assert code == 0
    assert out.strip() == "-z^3 - z^2 + 1"


def test_rep_delta(capsys):
    code, out = run(capsys, "rep", "delta", "gnn3:2:1")
    assert code == 0
    assert out.strip() == "4"


def test_rep_word_charpoly(capsys):
    code, out = run(capsys, "rep", "word", "h3_coxeter", "s1", "s2",
                    "--charpoly")
    assert code == 0
    assert out.strip().startswith("X^3")


def test_group_order_json(capsys):
    code, out = run(capsys, "group", "order", "--preset", "gppn:3:3",
                    "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["preset"] == "gppn:3:3"
    assert payload["order"] == 54


def test_group_order_cap(capsys):
    code, out = run(capsys, "group", "order", "--preset", "atilde:3",
                    "--cap", "200", "--json")
    assert code == 0
    assert json.loads(out)["cap_exceeded"] is True


def test_group_element_order(capsys):
    code, out = run(capsys, "group", "element-order", "--preset", "g24_334",
                    "--word", "s1 s2 s3")
    assert code == 0
    assert out.strip() == "14"


def test_group_relation_holds(capsys):
    code, out = run(capsys, "group", "relation", "--preset", "gnn3:4:1",
                    "--eq", "(s1 s2 s3)^2 = (s2 s3 s1)^2")
    assert code == 0
    assert out.strip() == "holds"


def test_group_relation_fails(capsys):
    code, out = run(capsys, "group", "relation", "--preset", "gnn3:4:1",
                    "--eq", "(s1 s2 s3)^7")
    assert code == 1
    assert out.strip() == "fails"


def test_parse_helpers():
    assert _parse_word("s1 s2 s10") == [1, 2, 10]
    assert _parse_range("-6..6") == (-6, 6)
    (lw, le), rhs = _parse_eq("(s1 s2)^3")
    assert (lw, le) == ([1, 2], 3)
    assert rhs is None
    with pytest.raises(ValueError):
        _parse_word("t1")
