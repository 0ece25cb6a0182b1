import json

import pytest

from cdelta import reports
from cdelta.cli import main, parse_c
from cdelta.field import build_field
from cdelta.functions import Monomial, function_dict
from cdelta.harness import (VerificationRecord, run_verify, sample_c_values)
from cdelta.spectra import uniformity


class TestRunVerify:
    def test_unknown_theorem(self):
        with pytest.raises(ValueError, match="unknown theorem id"):
            run_verify("nope")

    def test_gcd_lemma_all_pass(self):
        recs = run_verify("gcd-lemma")
        assert recs and all(r.verdict == "PASS" for r in recs)

    def test_gold_small_all_pass_with_skips_measured(self):
        recs = run_verify("gold", n_lo=3, n_hi=6)
        assert not any(r.verdict == "FAIL" for r in recs)
        skips = [r for r in recs if r.verdict == "SKIP"]
        assert skips and all(r.observed for r in skips)

    def test_gold_row_count_formula(self):
        # one record per (n, k, c) scanned: sum over n of (n-2) * (2^n - 1)
        n_lo, n_hi = 3, 6
        recs = run_verify("gold", n_lo=n_lo, n_hi=n_hi)
        want = sum((n - 2) * (2 ** n - 1) for n in range(n_lo, n_hi + 1))
        assert len(recs) == want

    def test_threads_same_records(self):
        a = run_verify("tnph", n_lo=2, n_hi=4, threads=1)
        b = run_verify("tnph", n_lo=2, n_hi=4, threads=4)
        strip = lambda rs: [(r.theorem, r.p, r.n, r.k, r.c, r.family,
                             r.predicted, r.observed, r.verdict) for r in rs]
        assert strip(a) == strip(b)

    def test_fail_records_reproduce_standalone(self):
        # force a FAIL by checking a deliberately wrong prediction, then
        # re-measure its parameter point independently
        f32 = build_field(2, 5)
        rep = uniformity(f32, Monomial(5), 3)
        rec = VerificationRecord("gold", 2, 5, k=2, c=3, predicted="=4",
                                 observed=str(rep.delta),
                                 verdict="FAIL" if rep.delta != 4 else "PASS")
        assert rec.verdict == "FAIL"
        again = uniformity(f32, Monomial(5), 3)
        assert str(again.delta) == rec.observed

    def test_sample_c_deterministic(self):
        f = build_field(2, 9)
        s1 = sample_c_values(f, 64, seed=7)
        s2 = sample_c_values(f, 64, seed=7)
        assert s1 == s2 and len(s1) == 64 and 1 not in s1
        assert s1 == sorted(s1)
        assert sample_c_values(f, 64, seed=8) != s1


class TestExports:
    def test_empty_csv_has_header(self):
        out = reports.records_csv([])
        assert out == "theorem,p,n,k,c,predicted,observed,verdict,ms\n"

    def test_record_roundtrip_json(self):
        recs = run_verify("gcd-lemma")
        blob = reports.records_json(recs)
        parsed = json.loads(blob)
        assert parsed["schema"] == 1
        assert len(parsed["records"]) == len(recs)
        r0 = parsed["records"][0]
        assert r0["theorem"] == recs[0].theorem
        assert r0["verdict"] == recs[0].verdict
        assert r0["ms"] == 0      # timings zeroed for determinism

    def test_spectrum_roundtrip(self):
        f9 = build_field(3, 2)
        rep = uniformity(f9, Monomial(6), 2)
        rt = reports.spectrum_from_dict(
            json.loads(reports.spectra_json(rep)))
        assert rt == rep

    def test_spectrum_csv_layout(self):
        f9 = build_field(3, 2)
        rep = uniformity(f9, Monomial(6), 2)
        lines = reports.spectra_csv([rep]).splitlines()
        assert lines[0].startswith("p,n,modulus,function,c,delta,histogram")
        assert ";" in lines[1] and "0:36" in lines[1]

    def test_determinism_byte_identical(self):
        kw = dict(n_lo=9, n_hi=9, c_policy="sample", sample=8, seed=42)
        a = run_verify("gold", **kw)
        b = run_verify("gold", **kw)
        assert reports.records_json(a) == reports.records_json(b)
        assert reports.records_csv(a) == reports.records_csv(b)


class TestCache:
    def test_hit_identical_and_no_recompute(self, tmp_path):
        f9 = build_field(3, 2)
        calls = []

        def compute():
            calls.append(1)
            return uniformity(f9, Monomial(6), 2)

        fd = function_dict(Monomial(6))
        first = reports.cache_get_put(str(tmp_path), f9, fd, 2, compute)
        second = reports.cache_get_put(str(tmp_path), f9, fd, 2, compute)
        assert len(calls) == 1
        assert first == second

    def test_modulus_changes_key(self):
        fd = function_dict(Monomial(6))
        k1 = reports.cache_key(3, 2, (2, 1, 1), fd, 2)
        k2 = reports.cache_key(3, 2, (1, 0, 1), fd, 2)
        assert k1 != k2

    def test_disabled_cache_always_computes(self):
        f9 = build_field(3, 2)
        calls = []

        def compute():
            calls.append(1)
            return uniformity(f9, Monomial(6), 2)

        reports.cache_get_put(None, f9, function_dict(Monomial(6)), 2, compute)
        reports.cache_get_put(None, f9, function_dict(Monomial(6)), 2, compute)
        assert len(calls) == 2

    def test_corrupt_entry_recomputed_with_warning(self, tmp_path):
        f9 = build_field(3, 2)
        fd = function_dict(Monomial(6))
        key = reports.cache_key(3, 2, (2, 1, 1), fd, 2)
        path = tmp_path / f"{key}.json"
        path.write_text("{ not json")
        with pytest.warns(UserWarning, match="corrupt"):
            rep = reports.cache_get_put(str(tmp_path), f9, fd, 2,
                                        lambda: uniformity(f9, Monomial(6), 2))
        assert rep.delta == 2
        # entry was overwritten with a valid one
        json.loads(path.read_text())


class TestCli:
    def test_parse_c(self):
        f9 = build_field(3, 2)
        assert parse_c(f9, "-1") == 2
        assert parse_c(f9, "0") == 0
        assert parse_c(f9, "idx:7") == 7
        with pytest.raises(SystemExit):
            parse_c(f9, "idx:99")

    def test_field_info(self, capsys):
        assert main(["field-info", "--p", "3", "--n", "2"]) == 0
        out = capsys.readouterr().out
        assert "GF(3^2)" in out and "2,1,1" in out

    def test_eval(self, capsys):
        assert main(["eval", "--p", "3", "--n", "2", "--monomial", "2",
                     "--x", "idx:3"]) == 0
        assert capsys.readouterr().out.strip() == "7"

    def test_uniformity_json_out(self, tmp_path, capsys):
        out = tmp_path / "rep.json"
        rc = main(["uniformity", "--p", "3", "--n", "2", "--monomial", "6",
                   "--c", "-1", "--format", "json", "--out", str(out)])
        assert rc == 0
        data = json.loads(out.read_text())
        assert data["delta"] == 2 and data["field"]["p"] == 3

    def test_sweep_csv_and_figure(self, tmp_path):
        out = tmp_path / "sweep.csv"
        fig = tmp_path / "sweep.png"
        rc = main(["sweep", "--p", "3", "--n", "2", "--monomial", "2",
                   "--c", "all", "--format", "csv", "--out", str(out),
                   "--figure", str(fig)])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1 + 8      # header + one row per c != 1
        assert fig.stat().st_size > 0

    def test_verify_exit_codes_and_export(self, tmp_path):
        out = tmp_path / "v.csv"
        rc = main(["verify", "--theorem", "gcd-lemma", "--format", "csv",
                   "--out", str(out)])
        assert rc == 0
        assert out.read_text().startswith("theorem,p,n,k,c,predicted")

    def test_verify_figure(self, tmp_path):
        fig = tmp_path / "v.png"
        rc = main(["verify", "--theorem", "tnph", "--n-min", "2", "--n-max",
                   "3", "--format", "json", "--out", str(tmp_path / "v.json"),
                   "--figure", str(fig)])
        assert rc == 0 and fig.stat().st_size > 0

    def test_verify_byte_identical_exports(self, tmp_path):
        args = ["verify", "--theorem", "gold", "--n-min", "9", "--n-max", "9",
                "--c-policy", "sample", "--sample", "8", "--seed", "5",
                "--format", "json"]
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_dickson_and_gold_roots_and_jacobsthal(self, tmp_path, capsys):
        assert main(["dickson", "--p", "3", "--n", "3", "--m", "15"]) == 0
        assert "max fiber 1" in capsys.readouterr().out
        fig = tmp_path / "roots.png"
        assert main(["gold-roots", "--n", "5", "--k", "1", "--figure",
                     str(fig)]) == 0
        assert "{0: 11, 1: 15, 3: 5}" in capsys.readouterr().out
        assert fig.stat().st_size > 0
        assert main(["jacobsthal", "--p", "3", "--n", "2", "--a2", "1",
                     "--a1", "-1", "--a0", "0"]) == 0

    def test_domain_errors_exit_cleanly(self, capsys):
        assert main(["eval", "--p", "3", "--n", "2", "--family", "nope",
                     "--x", "0"]) == 2
        assert main(["uniformity", "--p", "3", "--n", "2", "--family", "hrs1",
                     "--c", "0"]) == 2
        assert main(["field-info", "--p", "3", "--n", "2", "--modulus",
                     "2,0,1"]) == 2
        assert main(["sweep", "--p", "5", "--n", "5", "--poly", "0,1,1",
                     "--c", "all"]) == 2
        err = capsys.readouterr().err
        assert "not applicable" in err and "budget" in err

    def test_uniformity_cached(self, tmp_path, capsys):
        cache = tmp_path / "cache"
        args = ["uniformity", "--p", "3", "--n", "2", "--monomial", "6",
                "--c", "-1", "--cache-dir", str(cache)]
        assert main(args) == 0
        first = capsys.readouterr().out
        assert main(args) == 0
        assert capsys.readouterr().out == first
        assert len(list(cache.iterdir())) == 1
