"""CLI subcommands compose library calls; nothing more."""

from __future__ import annotations

import pytest

from confrec import dataio
from confrec.cli import main
from confrec.engine import Channel, recommend_for
from confrec.evaluation import SplitSpec, ablation_report, render_ablation_text, split, sweep, render_sweep_csv
from confrec.generator import GeneratorConfig, generate
from confrec.model import Thresholds
from tests.conftest import build_conf, make_session


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


GEN_ARGS = (
    "generate", "--seed", "5", "--participants", "10", "--presenters", "3",
    "--sessions", "4", "--tags", "8", "--density", "0.5",
)


class TestGenerate:
    def test_writes_valid_dataset(self, tmp_path, capsys):
        out = tmp_path / "conf.txt"
        code, stdout, _ = run(capsys, *GEN_ARGS, "--out", str(out))
        assert code == 0
        assert "10 participants" in stdout
        assert dataio.load(out) is not None

    def test_same_seed_byte_identical(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        assert run(capsys, *GEN_ARGS, "--out", str(a))[0] == 0
        assert run(capsys, *GEN_ARGS, "--out", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_impossible_config_exit_2(self, tmp_path, capsys):
        code, _, stderr = run(
            capsys, "generate", "--sessions", "99", "--locations", "1",
            "--out", str(tmp_path / "x.txt"),
        )
        assert code == 2
        assert "cannot fit" in stderr


class TestValidate:
    def test_ok_file(self, tmp_path, capsys):
        out = tmp_path / "conf.txt"
        run(capsys, *GEN_ARGS, "--out", str(out))
        code, stdout, _ = run(capsys, "validate", str(out))
        assert code == 0
        assert stdout.strip() == "ok"

    def test_violations_exit_1(self, tmp_path, capsys):
        out = tmp_path / "conf.txt"
        run(capsys, *GEN_ARGS, "--out", str(out))
        text = out.read_text(encoding="utf-8")
        first_rating = next(l for l in text.split("\n") if l.count("\t") == 2 and l[0] == "p")
        broken = text.replace(first_rating, first_rating.rsplit("\t", 1)[0] + "\t9", 1)
        out.write_text(broken, encoding="utf-8")
        code, stdout, _ = run(capsys, "validate", str(out))
        assert code == 1
        assert "rating out of range" in stdout
        assert "violation" in stdout

    def test_missing_file_exit_2(self, capsys):
        code, _, stderr = run(capsys, "validate", "/nonexistent/conf.txt")
        assert code == 2
        assert stderr


@pytest.fixture()
def demo_file(tmp_path):
    conf = build_conf(
        roster={"p1", "p2", "p3"},
        presenters={"p1"},
        sessions=[make_session("s1", "p1", "hall-a", 60, 90, tags={"graphs"})],
        ratings={
            ("p1", "graphs"): 5, ("p1", "ml"): 2,
            ("p2", "graphs"): 5, ("p2", "ml"): 2,
            ("p3", "graphs"): 2, ("p3", "ml"): 4,
        },
        contacts={("p1", "p2"): (6, 70)},
        availabilities={"p2": [("hall-a", 0, 720)], "p3": [("hall-a", 0, 720)]},
        thresholds=Thresholds(gamma=1.0, beta=0.5, delta=0.9),
    )
    path = tmp_path / "demo.txt"
    dataio.save(conf, path)
    return path


class TestRecommend:
    def test_prints_both_channels_with_explanations(self, demo_file, capsys):
        code, stdout, _ = run(capsys, "recommend", str(demo_file), "--participant", "p2")
        assert code == 0
        assert "social-context:" in stdout
        assert "social-relations:" in stdout
        assert "s1" in stdout
        assert "pearson=1.0000" in stdout
        assert "tie=0.5833" in stdout
        assert "matched hall-a 0-720" in stdout

    def test_gamma_above_all_similarities_empties_context_channel(self, demo_file, capsys):
        # p3 agrees with nobody perfectly; gamma at the ceiling shuts the channel
        code, stdout, _ = run(capsys, "recommend", str(demo_file), "--participant", "p3")
        assert code == 0
        context_block = stdout.split("social-context:")[1].split("social-relations:")[0]
        assert "(none)" in context_block

    def test_output_matches_direct_library_call(self, demo_file, capsys):
        _, stdout, _ = run(
            capsys, "recommend", str(demo_file), "--participant", "p2", "--beta", "0.7",
        )
        conf = dataio.load(demo_file)
        from dataclasses import replace

        adjusted = replace(conf, thresholds=replace(conf.thresholds, beta=0.7))
        lists = recommend_for(adjusted, "p2")
        for channel, recs in lists.items():
            for rec in recs:
                assert rec.session.session_id in stdout
        # beta 0.7 shuts the tie branch (tie 0.5833) and delta 0.9 the rest
        assert lists[Channel.SOCIAL_RELATIONS] == ()

    def test_unknown_participant_exit_1(self, demo_file, capsys):
        code, _, stderr = run(capsys, "recommend", str(demo_file), "--participant", "ghost")
        assert code == 1
        assert "unknown participant" in stderr


class TestEvaluate:
    def test_writes_csv_and_text(self, tmp_path, capsys):
        data = tmp_path / "conf.txt"
        run(capsys, *GEN_ARGS, "--out", str(data))
        out = tmp_path / "report.csv"
        code, stdout, _ = run(
            capsys, "evaluate", str(data), "--grid", "0.0,0.5,1.0",
            "--split-seed", "7", "--out", str(out),
        )
        assert code == 0
        assert out.exists()
        text_path = tmp_path / "report.csv.txt"
        assert text_path.exists()
        assert "scorer comparison" in text_path.read_text(encoding="utf-8")
        lines = out.read_text(encoding="utf-8").strip().split("\n")
        assert lines[0] == "channel,threshold,e,f,g,h,precision,recall"
        # both channels x 3 grid points
        assert len(lines) == 7

    def test_matches_direct_pipeline(self, tmp_path, capsys):
        data = tmp_path / "conf.txt"
        run(capsys, *GEN_ARGS, "--out", str(data))
        out = tmp_path / "report.csv"
        run(
            capsys, "evaluate", str(data), "--channel", "social-relations",
            "--grid", "0.0,0.4", "--split-seed", "3", "--out", str(out),
        )
        conf = dataio.load(data)
        train, labels = split(conf, SplitSpec(train_fraction=0.8, seed=3))
        report = sweep(train, labels, Channel.SOCIAL_RELATIONS, [0.0, 0.4], dataset_id="conf.txt")
        assert out.read_text(encoding="utf-8") == render_sweep_csv([report])
        expected_text = render_ablation_text(ablation_report(train, labels, dataset_id="conf.txt"))
        assert (tmp_path / "report.csv.txt").read_text(encoding="utf-8") == expected_text

    def test_bad_grid_exit_2(self, tmp_path, capsys):
        data = tmp_path / "conf.txt"
        run(capsys, *GEN_ARGS, "--out", str(data))
        code, _, stderr = run(
            capsys, "evaluate", str(data), "--grid", "zero,one", "--out", str(tmp_path / "r.csv"),
        )
        assert code == 2
        assert "grid" in stderr


class TestServe:
    def test_requires_data(self, capsys):
        code, _, stderr = run(capsys, "serve", "--listen", "127.0.0.1:0")
        assert code == 2
        assert "--data" in stderr
