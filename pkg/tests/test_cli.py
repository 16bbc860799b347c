import json
from fractions import Fraction

import pytest

import main
from constants import CONFIG_ENV, SEED_ENV
from meta import EXIT_OK, EXIT_USAGE, EXIT_IMPOSSIBLE


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    monkeypatch.delenv(SEED_ENV, raising=False)
    monkeypatch.setenv(CONFIG_ENV, str(tmp_path / "absent.conf"))


def run(*argv):
    return main.main([str(arg) for arg in argv])


def read_json(path):
    with open(path) as f:
        return json.load(f)


def rational(item):
    return Fraction(int(item["num"]), int(item["den"]))


class TestOptimal:
    def test_three_sides(self, capsys):
        assert run("optimal", "--n", 3) == EXIT_OK
        out = capsys.readouterr().out
        assert "D_min = 1/70 ≈ 0.0142857142857" in out
        assert "point-mass" in out

    def test_json_is_exact(self, tmp_path):
        path = tmp_path / "pair.json"
        assert run("optimal", "--n", 6, "--json", path) == EXIT_OK
        assert '"den": "352"' in path.read_text()
        payload = read_json(path)
        assert payload["theorem"] == "thm1"
        assert payload["mode"] == "rational"
        assert payload["manifest"]["command"] == "optimal"
        assert payload["manifest"]["parameters"] == {"n": "6"}

    def test_two_sides(self, tmp_path):
        path = tmp_path / "coins.json"
        assert run("optimal", "--n", 2, "--json", path) == EXIT_OK
        dice = read_json(path)["dice"]
        assert [[rational(w) for w in die] for die in dice] == [[Fraction(1, 2)] * 2] * 2

    def test_csv_profile(self, tmp_path):
        path = tmp_path / "profile.csv"
        assert run("optimal", "--n", 3, "--csv", path) == EXIT_OK
        lines = path.read_text().splitlines()
        assert lines[0] == "j,c_j"
        assert lines[1] == "2,1/7"
        assert lines[3] == "4,2/7"

    def test_float_mode(self, tmp_path):
        path = tmp_path / "pair.json"
        assert run("optimal", "--n", 3, "--mode", "float", "--json", path) == EXIT_OK
        payload = read_json(path)
        assert payload["mode"] == "float"
        assert payload["d_min"] == pytest.approx(1 / 70, abs=1e-15)

    @pytest.mark.parametrize("argv", [
        ("optimal", "--n", "x"),
        ("optimal", "--n", 1),
        ("optimal",),
        ("optimal", "--n", 3, "--mode", "decimal"),
        ("unknown",),
        (),
    ])
    def test_usage_errors(self, argv, capsys):
        assert run(*argv) == EXIT_USAGE
        assert capsys.readouterr().err

    def test_timestamp_can_be_suppressed(self, tmp_path):
        path = tmp_path / "pair.json"
        assert run("optimal", "--n", 4, "--json", path, "--no-timestamp") == EXIT_OK
        first = path.read_bytes()
        assert run("optimal", "--n", 4, "--json", path, "--no-timestamp") == EXIT_OK
        assert path.read_bytes() == first
        assert "timestamp" not in read_json(path)["manifest"]

        assert run("optimal", "--n", 4, "--json", path) == EXIT_OK
        assert "timestamp" in read_json(path)["manifest"]


def test_conjecture(tmp_path, capsys):
    path = tmp_path / "conjecture.json"
    assert run("conjecture", "--n", 5, "--m", 3, "--json", path) == EXIT_OK
    assert "CONJECTURE" in capsys.readouterr().out
    payload = read_json(path)
    assert payload["status"] == "conjecture"
    assert [rational(w) for w in payload["dice"][0]] == [Fraction(k, 21) for k in (3, 5, 5, 5, 3)]


class TestOptimize:
    def test_seeded_run(self, tmp_path, capsys):
        path = tmp_path / "best.json"
        argv = ("optimize", "--n", 3, "--m", 2, "--seed", 1, "--starts", 5, "--json", path, "--no-timestamp")
        assert run(*argv) == EXIT_OK
        out = capsys.readouterr().out
        assert "converged:" in out
        assert "symmetric:" in out
        payload = read_json(path)
        assert payload["d_value"] == pytest.approx(1 / 70, abs=1e-9)
        assert payload["comparison"]["reference"] == "thm1"
        assert payload["manifest"]["seed"] == 1
        assert payload["manifest"]["mode"] == "float"
        assert len(payload["starts"]) == 5

        first = path.read_bytes()
        assert run(*argv) == EXIT_OK
        assert path.read_bytes() == first

    def test_seed_from_environment(self, tmp_path, monkeypatch):
        monkeypatch.setenv(SEED_ENV, "3")
        path = tmp_path / "best.json"
        assert run("optimize", "--n", 3, "--m", 2, "--starts", 2, "--json", path) == EXIT_OK
        assert read_json(path)["seed"] == 3

    def test_more_dice_compare_with_conjecture(self, tmp_path):
        path = tmp_path / "best.json"
        assert run("optimize", "--n", 3, "--m", 3, "--starts", 3, "--json", path) == EXIT_OK
        assert read_json(path)["comparison"]["reference"] == "conjecture"

    def test_bad_optimizer_flag(self):
        assert run("optimize", "--n", 3, "--m", 2, "--starts", 0) == EXIT_USAGE

    def test_rational_mode_flag_is_rejected(self, capsys):
        assert run("optimize", "--n", 3, "--m", 2, "--starts", 2, "--mode", "rational") == EXIT_USAGE
        assert "float mode only" in capsys.readouterr().err

    def test_rational_mode_from_config_is_ignored(self, tmp_path, monkeypatch):
        config = tmp_path / "rational.conf"
        config.write_text("[DEFAULT]\nmode = rational\n")
        monkeypatch.setenv(CONFIG_ENV, str(config))
        path = tmp_path / "best.json"
        assert run("optimize", "--n", 3, "--m", 2, "--starts", 2, "--json", path) == EXIT_OK
        assert read_json(path)["manifest"]["mode"] == "float"


class TestConstruct:
    def test_three_sides(self, tmp_path, capsys):
        path = tmp_path / "uniform.json"
        assert run("construct", "--n", 3, "--m", 2, "--json", path) == EXIT_OK
        assert "max uniform error" in capsys.readouterr().out
        payload = read_json(path)
        assert payload["outcome"] == "dice"
        assert payload["allow_negative"] is True
        assert payload["partition"] == [[1], [2]]
        assert payload["max_uniform_error"] <= 1e-10

    def test_even_sides(self, tmp_path, capsys):
        path = tmp_path / "verdict.json"
        assert run("construct", "--n", 4, "--m", 2, "--json", path) == EXIT_IMPOSSIBLE
        assert "impossible: n even" in capsys.readouterr().out
        payload = read_json(path)
        assert payload["outcome"] == "impossible"
        assert payload["reason"] == "n even (Theorem 2)"

    def test_explicit_partition(self, tmp_path):
        path = tmp_path / "uniform.json"
        assert run("construct", "--n", 5, "--m", 2, "--partition", "1,2;3,4", "--json", path) == EXIT_OK
        payload = read_json(path)
        assert payload["partition"] == [[1, 2], [3, 4]]
        assert payload["max_uniform_error"] <= 1e-10

    def test_all_partitions(self, tmp_path):
        path = tmp_path / "uniform.json"
        assert run("construct", "--n", 5, "--m", 2, "--all-partitions", "--json", path) == EXIT_OK
        partitions = read_json(path)["partitions"]
        assert len(partitions) == 6
        assert all(item["max_uniform_error"] <= 1e-10 for item in partitions)

    @pytest.mark.parametrize("partition", ["1,2;3", "1,2;3,3", "a;b"])
    def test_malformed_partition(self, partition):
        assert run("construct", "--n", 5, "--m", 2, "--partition", partition) == EXIT_USAGE


class TestDistance:
    def test_fair_dice(self, tmp_path, capsys):
        path = tmp_path / "fair.json"
        path.write_text(json.dumps({"n": 6, "mode": "rational", "dice": [["1/6"] * 6] * 2}))
        out_path = tmp_path / "profile.json"
        assert run("distance", path, "--json", out_path) == EXIT_OK
        profile = read_json(out_path)["profile"]["c"]
        assert [item["j"] for item in profile] == list(range(2, 13))
        assert rational(profile[5]["c_j"]) == Fraction(6, 36)
        assert rational(profile[0]["c_j"]) == Fraction(1, 36)

    def test_round_trip_rational(self, tmp_path, capsys):
        pair = tmp_path / "pair.json"
        assert run("optimal", "--n", 3, "--json", pair) == EXIT_OK
        capsys.readouterr()
        out_path = tmp_path / "distance.json"
        assert run("distance", pair, "--json", out_path) == EXIT_OK
        assert "D = 1/70" in capsys.readouterr().out
        assert rational(read_json(out_path)["d_value"]) == Fraction(1, 70)

    def test_round_trip_float(self, tmp_path):
        best = tmp_path / "best.json"
        assert run("optimize", "--n", 4, "--m", 2, "--starts", 3, "--json", best) == EXIT_OK
        out_path = tmp_path / "distance.json"
        assert run("distance", best, "--json", out_path) == EXIT_OK
        assert read_json(out_path)["d_value"] == pytest.approx(read_json(best)["d_value"], abs=1e-14)

    def test_identical_six_sided_dice(self, tmp_path):
        die = [0.243883, 0.137480, 0.118637, 0.118637, 0.137480, 0.243883]
        total = sum(die)
        path = tmp_path / "identical.json"
        path.write_text(json.dumps({"n": 6, "mode": "float", "dice": [[w / total for w in die]] * 2}))
        out_path = tmp_path / "distance.json"
        assert run("distance", path, "--json", out_path) == EXIT_OK
        assert read_json(out_path)["d_value"] > 1 / 352

    @pytest.mark.parametrize("content", [
        "not json",
        json.dumps({"dice": []}),
        json.dumps({"n": 2, "dice": [["1/2", "1/3"]]}),
        json.dumps({"n": 2, "mode": "rational", "dice": [[0.5, 0.5]]}),
        json.dumps({"n": 2, "dice": [["3/2", "-1/2"]]}),
        json.dumps({"n": 3, "dice": [["1/2", "1/2"]]}),
    ])
    def test_bad_files(self, tmp_path, content):
        path = tmp_path / "bad.json"
        path.write_text(content)
        assert run("distance", path) == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        assert run("distance", tmp_path / "absent.json") == EXIT_USAGE
