import json

import pytest

from bolmoufang.cli import main
from bolmoufang.constructions import cyclic_group, example_loop
from bolmoufang.evaluate import holds, satisfies_variety
from bolmoufang.loops import parse_loop_text, write_loop_file


@pytest.fixture
def loop_file(tmp_path):
    def make(loop, name="input.loop"):
        path = tmp_path / name
        write_loop_file(path, loop)
        return str(path)

    return make


def test_name_command(capsys):
    assert main(["name", "x((yy)z)=((xy)y)z"]) == 0
    out = capsys.readouterr().out
    assert "C25 (RC-loop class)" in out


def test_name_command_group_identity(capsys):
    assert main(["name", "x(x(yz))=x((xy)z)"]) == 0
    assert "A12 (GR-loop class)" in capsys.readouterr().out


def test_name_command_rejects_garbage(capsys):
    assert main(["name", "x((yy)z"]) == 2
    assert main(["name", "x(yz)=x(yz)"]) == 2


def test_dual_command_with_name(capsys):
    assert main(["dual", "B35"]) == 0
    out = capsys.readouterr().out
    assert "E13" in out and "x(y(zy))=(xy)(zy)" in out


def test_dual_command_with_identity(capsys):
    assert main(["dual", "(xy)(xz)=((xy)x)z"]) == 0
    assert "E13" in capsys.readouterr().out


def test_dual_command_bad_input():
    assert main(["dual", "Q99"]) == 2


def test_check_identity_pass(capsys, loop_file):
    path = loop_file(cyclic_group(5))
    assert main(["check", path, "--identity", "D34"]) == 0
    assert "D34: holds" in capsys.readouterr().out


def test_check_identity_fail_with_witness(capsys, loop_file):
    path = loop_file(example_loop("6.6"))
    assert main(["check", path, "--identity", "A13"]) == 1
    out = capsys.readouterr().out
    assert "A13: FAILS" in out and "lhs=" in out


def test_check_variety(capsys, loop_file):
    path = loop_file(example_loop("6.6"))
    assert main(["check", path, "--variety", "FL"]) == 0
    assert main(["check", path, "--variety", "LA"]) == 1


def test_check_all(capsys, loop_file):
    path = loop_file(cyclic_group(4))
    assert main(["check", path, "--all"]) == 0
    out = capsys.readouterr().out
    assert out.count("holds") == 75


def test_check_missing_file():
    assert main(["check", "/nonexistent/path.loop", "--variety", "GR"]) == 2


def test_profile_command(capsys, loop_file):
    path = loop_file(example_loop("6.2"))
    assert main(["profile", path]) == 0
    out = capsys.readouterr().out
    assert "ML+" in out and "GR-" in out and "D34+" in out


def test_enumerate_count_only(capsys):
    assert main(["enumerate", "--order", "5", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "56"


def test_enumerate_streams_tables(capsys):
    assert main(["enumerate", "--order", "3"]) == 0
    out = capsys.readouterr().out
    assert "# loop 0" in out
    assert parse_loop_text(out).order == 3


def test_find_order_five(capsys, tmp_path):
    out_file = tmp_path / "found.loop"
    assert main([
        "find", "--order", "5", "--require", "B45", "--forbid", "A45",
        "--minimal", "--output", str(out_file),
    ]) == 0
    printed = capsys.readouterr().out
    loop = parse_loop_text(printed)
    assert satisfies_variety(loop, "FL") and not satisfies_variety(loop, "LA")
    assert holds(loop, "B45").holds and not holds(loop, "A45").holds
    assert parse_loop_text(out_file.read_text()) == loop
    assert "A45 fails at" in printed


def test_find_exhausted(capsys):
    assert main(["find", "--order", "3", "--require", "B45", "--forbid", "A45"]) == 0
    assert "exhausted order 3" in capsys.readouterr().out


def test_find_minimal_over_orders(capsys):
    assert main(["find", "--max-order", "6", "--require", "MN", "--forbid", "3PA"]) == 0
    assert parse_loop_text(capsys.readouterr().out).order == 6


def test_find_none_up_to_cap(capsys):
    assert main(["find", "--max-order", "4", "--require", "MN", "--forbid", "3PA"]) == 0
    assert "no loop up to order 4" in capsys.readouterr().out


def test_find_usage_errors(capsys):
    assert main(["find", "--require", "FL"]) == 2  # neither --order nor --max-order
    assert main(["find", "--order", "3", "--max-order", "4"]) == 2
    assert main(["find", "--order", "3", "--require", "XYZ"]) == 2
    assert main(["find", "--order", "3", "--require", "FL", "--forbid", "FL"]) == 2


def test_reproduce_examples(capsys):
    assert main(["reproduce", "examples"]) == 0
    assert "CONSISTENT" in capsys.readouterr().out


def test_reproduce_table2(capsys):
    assert main(["reproduce", "table2"]) == 0
    assert "CONSISTENT" in capsys.readouterr().out


def test_reproduce_table3_order_four(capsys):
    assert main(["reproduce", "table3", "--max-order", "4", "--no-cache"]) == 0
    out = capsys.readouterr().out
    assert "CONSISTENT" in out and "separation: 1305" in out


def test_reproduce_figure1_records(capsys):
    assert main([
        "reproduce", "figure1", "--max-order", "4", "--no-cache", "--format", "records",
    ]) == 0
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert all(r["ok"] for r in records)
    kinds = {r["kind"] for r in records}
    assert kinds == {"inclusion", "non-inclusion", "structure"}


def test_reproduce_verbose_lists_certificates(capsys):
    assert main(["reproduce", "examples", "--verbose"]) == 0
    assert "[ok]" in capsys.readouterr().out


def test_reproduce_uses_cache_dir(tmp_path, capsys):
    import bolmoufang.classify as classify

    classify._MEMO.clear()
    assert main([
        "reproduce", "table3", "--max-order", "3", "--cache-dir", str(tmp_path),
    ]) == 0
    assert list(tmp_path.glob("catalog-order*.npz"))
    classify._MEMO.clear()


def test_unknown_command_is_usage_error():
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
