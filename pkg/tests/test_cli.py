import csv
import math

import pytest

from editdistort import bench
from editdistort.cli import main
from editdistort.datasets import RandomSpec, gen_random_pairs, read_pairs
from editdistort.distortion import empirical_distortion


def rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_gen_random(tmp_path, capsys):
    out = tmp_path / "p.tsv"
    assert main(["gen-random", "--n", "100", "--sigma", "4", "--edits", "4", "--count", "200", "--seed", "7", "--out", str(out)]) == 0
    pairs = read_pairs(out)
    assert len(pairs) == 200 and all(p.exact <= 4 for p in pairs)
    assert "pairs=200" in capsys.readouterr().err
    again = tmp_path / "q.tsv"
    main(["gen-random", "--n", "100", "--sigma", "4", "--edits", "4", "--count", "200", "--seed", "7", "--out", str(again)])
    assert out.read_bytes() == again.read_bytes()


def test_gen_usage_errors(tmp_path):
    base = ["gen-random", "--n", "10", "--sigma", "4", "--edits", "2", "--out", str(tmp_path / "p")]
    assert main(base + ["--count", "0"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["gen-random", "--n", "10"])
    assert exc.value.code == 2


def test_bench_with_control(tmp_path):
    out = tmp_path / "r.csv"
    code = main(["bench", "--n", "60", "--sigma", "4", "--edits", "4", "--count", "40", "--seed", "3",
                 "--algos", "identity,baryossef,batu", "--out", str(out), "--no-timing"])
    assert code == 0
    got = {r["algorithm"]: r for r in rows(out)}
    assert got["identity"]["K"] == "1"
    assert got["baryossef"]["params"] in {"q=2", "q=4", "q=6"}
    assert got["batu"]["params"] in {"c=2;j=1", "c=4;j=1"}
    every = rows(f"{out}.candidates.csv")
    assert [r["params"] for r in every if r["algorithm"] == "baryossef"] == ["q=2", "q=4", "q=6"]
    best_k = min(float(r["K"]) for r in every if r["algorithm"] == "baryossef")
    assert float(got["baryossef"]["K"]) == best_k
    assert got["batu"]["mean_call_us"] == ""


def test_bench_deterministic_across_threads(tmp_path):
    def run(threads, name):
        out = tmp_path / name
        args = ["bench", "--n", "40", "--sigma", "4", "--edits", "4", "--count", "30", "--seed", "5",
                "--threads", str(threads), "--out", str(out), "--no-timing"]
        assert main(args) == 0
        return out.read_bytes()

    assert run(1, "a.csv") == run(1, "b.csv") == run(2, "c.csv")


def test_bench_reports_expansion_order(tmp_path):
    out = tmp_path / "r.csv"
    main(["bench", "--n", "50", "--sigma", "4", "--edits", "4", "--count", "20", "--algos", "charikar,andoni09", "--out", str(out)])
    for r in rows(out):
        assert r["params"].startswith("t_max=") and ";t_mean=" in r["params"]


def test_bench_all_excluded(tmp_path):
    out = tmp_path / "r.csv"
    code = main(["bench", "--n", "30", "--sigma", "4", "--edits", "2", "--count", "10", "--theta", "50",
                 "--algos", "baryossef", "--out", str(out)])
    assert code == 3
    assert rows(out)[0]["K"] == "error"


def test_bench_from_pair_file_and_dump(tmp_path):
    pairs = tmp_path / "p.tsv"
    main(["gen-random", "--n", "50", "--sigma", "20", "--edits", "4", "--count", "25", "--seed", "1", "--out", str(pairs)])
    out, dump = tmp_path / "r.csv", tmp_path / "d.csv"
    assert main(["bench", "--pairs", str(pairs), "--algos", "sokolov,andoni10", "--out", str(out), "--dump-ratios", str(dump)]) == 0
    groups = bench.read_ratios(dump)
    for r in rows(out):
        samples = groups[(r["algorithm"], r["params"])]
        assert bench.fmt(empirical_distortion(samples, float(r["theta"])).K) == r["K"]
        assert r["dataset"] == "p" and r["edits"] == "4" and r["sigma"] == "20"


def test_dump_ratios_command(tmp_path):
    out = tmp_path / "d.csv"
    assert main(["dump-ratios", "--n", "20", "--sigma", "4", "--edits", "2", "--count", "5", "--algos", "baryossef", "--q-set", "2", "--out", str(out)]) == 0
    got = rows(out)
    assert len(got) == 5 and {r["params"] for r in got} == {"q=2"}


def test_ingest_fasta_command(tmp_path):
    fa = tmp_path / "c.fa"
    fa.write_text("".join(f">s{i}\n{'ACGT' * 30}{'ACGT'[i % 4] * i}\n" for i in range(6)))
    out = tmp_path / "p.tsv"
    assert main(["ingest-fasta", "--fasta", str(fa), "--bucket", "100", "--count", "12", "--seed", "2", "--out", str(out)]) == 0
    pairs = read_pairs(out)
    assert len(pairs) == 12 and all(len(p.x) == 100 for p in pairs)
    res = tmp_path / "r.csv"
    assert main(["bench", "--fasta", str(fa), "--bucket", "100", "--count", "12", "--theta", "0", "--algos", "andoni10", "--out", str(res)]) == 0
    assert rows(res)[0]["dataset"] == "c-n100"


def test_theory_command(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["theory", "--n", "100:10000:5", "--out", str(out)]) == 0
    got = rows(out)
    assert len(got) == 6 * 5
    assert list(got[0]) == ["algorithm", "n", "theta", "k", "c", "j", "K"]
    assert {r["K"] for r in got if r["algorithm"] == "batu"} == {"30"}
    out2 = tmp_path / "t2.csv"
    main(["theory", "--n", "1024", "--theta", "5", "--out", str(out2)])
    got = {r["algorithm"]: r for r in rows(out2)}
    assert got["sokolov"]["K"] == "inf"
    assert got["andoni10"]["K"] == "120"
    main(["theory", "--n", "1000", "--k", "5", "--c", "2", "--batu-j", "1", "--out", str(out2)])
    assert {r["algorithm"]: r for r in rows(out2)}["batu"]["K"] == "72"
    assert main(["theory", "--n", "1", "--out", str(out2)]) == 2


def _results(path, entries):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(bench.RESULT_COLUMNS)
        for sigma, n, e, alg, k in entries:
            w.writerow(["d", alg, "", n, sigma, e, 1, k] + [""] * 7)


def test_best_command(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    _results(a, [(4, 100, 4, "batu", 3.5), (4, 100, 4, "andoni10", 2.0)])
    _results(b, [(4, 100, 4, "sokolov", 2.0), (20, 100, 4, "charikar", "inf"), (4, 300, 4, "identity", 1)])
    out = tmp_path / "best.csv"
    assert main(["best", str(a), str(b), "--out", str(out)]) == 0
    got = rows(out)
    assert [(r["sigma"], r["n"], r["best"], r["K"]) for r in got] == [("4", "100", "andoni10|sokolov", "2"), ("20", "100", "charikar", "inf")]
    single = tmp_path / "s.csv"
    _results(single, [(4, 100, 4, "batu", 3.5)])
    main(["best", str(single), "--out", str(out)])
    assert rows(out)[0]["best"] == "batu"


def test_best_schema_error(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("x,y\n1,2\n")
    assert main(["best", str(bad)]) == 3
    assert "bad.csv" in capsys.readouterr().err


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# desk run\nn = 30\nsigma = 4\nedits = 2\ncount = 7\nseed = 9\n")
    out = tmp_path / "p.tsv"
    assert main(["gen-random", "--config", str(cfg), "--count", "5", "--out", str(out)]) == 0
    pairs = read_pairs(out)
    assert len(pairs) == 5 and len(pairs[0].x) == 30 and pairs[0].params["seed"] == 9
    cfg.write_text("bogus = 1\n")
    with pytest.raises(SystemExit):
        main(["gen-random", "--config", str(cfg), "--n", "3", "--sigma", "2", "--edits", "1"])


def test_run_bench_library():
    pairs = gen_random_pairs(RandomSpec(40, 4, 4, count=20, seed=0))
    best, every = bench.run_bench(pairs, bench.default_candidates(["identity", "andoni10"]))
    assert best[0].algorithm == "identity" and best[0].K == 1
    assert len(every) == 2 and math.isfinite(best[1].K)
