import random

import pytest

from primeclocks import core
from primeclocks.cli import main
from primeclocks.core import clock_sum, parse_sum
from primeclocks.evaluator import truth_table_of


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_mixed_sum(self, capsys):
        code, out, _ = run(capsys, "eval", "--sum", "[7,3]+[13,6]", "--index", "0")
        assert code == 0 and out.strip() == "1"

    def test_empty_sum(self, capsys):
        code, out, _ = run(capsys, "eval", "--sum", "0", "--index", "9")
        assert code == 0 and out.strip() == "0"

    def test_mod5(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--sum", "[5,3]+[7,6]+[11,3]+[13,0]", "--index", "2", "--mod", "5"
        )
        assert code == 0 and out.strip() == "3"

    def test_parse_failure_exits_2(self, capsys):
        code, _, err = run(capsys, "eval", "--sum", "[4,1]", "--index", "0")
        assert code == 2
        assert "[4,1]" in err

    def test_offset_failure_names_token(self, capsys):
        code, _, err = run(capsys, "eval", "--sum", "[5,7]", "--index", "0")
        assert code == 2 and "[5,7]" in err


class TestTable:
    def test_single_three_clock(self, capsys):
        code, out, _ = run(capsys, "table", "--sum", "[3,1]", "--arity", "2")
        assert code == 0 and out.strip() == "1001"

    def test_empty(self, capsys):
        code, out, _ = run(capsys, "table", "--sum", "0", "--arity", "3")
        assert code == 0 and out.strip() == "00000000"

    def test_or_function(self, capsys):
        code, out, _ = run(capsys, "table", "--sum", "[2,0]+[3,2]", "--arity", "2")
        assert code == 0 and out.strip() == "0111"

    def test_bad_arity_exits_2(self, capsys):
        assert run(capsys, "table", "--sum", "0", "--arity", "0")[0] == 2
        assert run(capsys, "table", "--sum", "0", "--arity", "30")[0] == 2

    def test_cap_override(self, capsys):
        code, out, _ = run(capsys, "table", "--sum", "0", "--arity", "3", "--max-bits", "4")
        assert code == 2


class TestSynth:
    def test_basis_and(self, capsys):
        code, out, _ = run(
            capsys, "synth", "--table", "0001", "--method", "basis",
            "--primes", "2,3", "--minimize",
        )
        assert code == 0
        assert core.equal(parse_sum(out.strip()), parse_sum("[2,0]+[3,0]"))

    def test_zero_table(self, capsys):
        code, out, _ = run(capsys, "synth", "--table", "0000")
        assert code == 0 and out.strip() == "0"

    def test_single_forced(self, capsys):
        code, out, _ = run(capsys, "synth", "--table", "0110", "--method", "single", "--force-3mod4")
        assert code == 0
        s = parse_sum(out.strip())
        assert {c.p for c in s.clocks} == {7}
        assert truth_table_of(s, 2).bits == "0110"

    def test_unsat_exits_1(self, capsys):
        code, out, _ = run(capsys, "synth", "--table", "0001", "--method", "basis", "--primes", "2")
        assert code == 1 and out.strip() == "UNSAT"

    def test_bad_table_length_exits_2(self, capsys):
        code, _, err = run(capsys, "synth", "--table", "011")
        assert code == 2 and "power of two" in err

    def test_table_from_file(self, capsys, tmp_path):
        path = tmp_path / "table.txt"
        path.write_text("0110\n")
        code, out, _ = run(capsys, "synth", "--table", f"@{path}")
        assert code == 0
        assert truth_table_of(parse_sum(out.strip()), 2).bits == "0110"

    def test_output_is_canonical(self, capsys):
        code, out, _ = run(capsys, "synth", "--table", "1001", "--method", "basis", "--primes", "3")
        assert code == 0
        assert out.strip() == core.format_sum(parse_sum(out.strip()))


class TestPeriod:
    def test_six(self, capsys):
        code, out, _ = run(capsys, "period", "--sum", "[2,0]+[3,1]")
        assert code == 0 and out.strip() == "6"

    def test_full_wheel(self, capsys):
        code, out, _ = run(capsys, "period", "--sum", "[5,0]+[5,1]+[5,2]+[5,3]+[5,4]")
        assert code == 0 and out.strip() == "1"

    def test_single_clock(self, capsys):
        code, out, _ = run(capsys, "period", "--sum", "[13,6]")
        assert code == 0 and out.strip() == "13"

    def test_guard_breach_exits_2(self, capsys):
        code, _, err = run(
            capsys, "period", "--sum", "[101,0]+[103,0]+[107,0]+[109,0]", "--mod", "3"
        )
        assert code == 2 and "guard" in err


class TestVerify:
    def test_paper_tables_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "paper-tables")
        assert code == 0
        assert "FAIL" not in out
        assert out.count("PASS") >= 30

    def test_group_laws_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "group-laws")
        assert code == 0 and "FAIL" not in out

    def test_lemmas_suite_bounded(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "lemmas", "--max-prime", "13")
        assert code == 0
        assert "length-lemma:p=13" in out and "FAIL" not in out

    def test_unknown_suite_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "bogus"])
        assert exc.value.code == 2


class TestBench:
    def test_outputs_identical(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--sum", "[2,0]+[7,3]+[13,6]", "--arity", "8",
            "--workers", "2", "--variant", "residue",
        )
        assert code == 0
        assert "identical: yes" in out

    def test_multiplier_sums_identical_across_variants(self, capsys):
        from primeclocks.reference_data import MULTIPLIER_SUMS

        for _, text in MULTIPLIER_SUMS:
            for variant in ("xor", "residue"):
                code, out, _ = run(
                    capsys, "bench", "--sum", text, "--arity", "4",
                    "--workers", "4", "--variant", variant,
                )
                assert code == 0 and "identical: yes" in out

    def test_workers_one(self, capsys):
        code, out, _ = run(capsys, "bench", "--sum", "[3,1]", "--arity", "4", "--workers", "1")
        assert code == 0 and "identical: yes" in out


class TestRoundTrip:
    def test_print_parse_round_trip_random(self):
        rng = random.Random(30)
        for _ in range(100):
            pairs = []
            for _ in range(rng.randrange(6)):
                p = rng.choice((2, 3, 5, 7, 11, 13))
                pairs.append((p, rng.randrange(p)))
            s = clock_sum(pairs)
            text = core.format_sum(s)
            back = core.parse_sum(text)
            assert sorted(back.clocks) == sorted(s.clocks)
            assert core.format_sum(back) == text
