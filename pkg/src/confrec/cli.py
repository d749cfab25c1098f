"""Batch entry points: generate, validate, recommend, evaluate, serve.

Every subcommand is a thin composition of library calls; no recommendation
or evaluation logic lives here. Exit codes: 0 success, 1 validation
failure, 2 I/O or usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

from confrec import dataio
from confrec.engine import BOTH_CHANNELS, Channel, recommend_for
from confrec.evaluation import (
    SplitSpec,
    ablation_report,
    render_ablation_text,
    split,
    sweep,
    write_sweep_csv,
)
from confrec.generator import GeneratorConfig, generate
from confrec.model import ValidationError, validate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


def _env(name: str, default=None):
    return os.environ.get(f"CONFREC_{name}", default)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confrec",
        description="Socially-aware conference session recommender",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a seeded synthetic dataset file")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--participants", type=int, default=78)
    gen.add_argument("--presenters", type=int, default=12)
    gen.add_argument("--sessions", type=int, default=16)
    gen.add_argument("--tags", type=int, default=40)
    gen.add_argument("--density", type=float, default=0.25, help="rating density in (0, 1]")
    gen.add_argument("--max-duration", type=int, default=80, help="max pairwise contact minutes")
    gen.add_argument("--max-frequency", type=int, default=7, help="max pairwise meeting count")
    gen.add_argument("--frame", type=int, default=720, help="conference frame in minutes")
    gen.add_argument("--locations", type=int, default=4)
    gen.add_argument("--coverage", type=float, default=0.6, help="availability coverage in (0, 1]")
    gen.add_argument("--out", required=True, help="output dataset path")

    val = sub.add_parser("validate", help="check a dataset file against all invariants")
    val.add_argument("file")

    rec = sub.add_parser("recommend", help="print recommendations for one participant")
    rec.add_argument("file")
    rec.add_argument("--participant", required=True)
    rec.add_argument("--gamma", type=float, default=None)
    rec.add_argument("--beta", type=float, default=None)
    rec.add_argument("--delta", type=float, default=None)
    rec.add_argument("--top-n", type=int, default=None)
    rec.add_argument("--strict", action="store_true",
                     help="also require the similarity gate on the social-relations channel")

    ev = sub.add_parser("evaluate", help="holdout split, threshold sweep, ablation tables")
    ev.add_argument("file")
    ev.add_argument("--channel", choices=["social-context", "social-relations", "both"],
                    default="both")
    ev.add_argument("--grid", required=True,
                    help="comma-separated ascending gate values, e.g. 0.0,0.25,0.5")
    ev.add_argument("--split-seed", type=int, default=0)
    ev.add_argument("--train-fraction", type=float, default=0.8)
    ev.add_argument("--out", required=True, help="CSV output path; text tables go to <out>.txt")

    srv = sub.add_parser("serve", help="run the recommendation service")
    srv.add_argument("--listen", default=_env("LISTEN", "127.0.0.1:8000"), help="host:port")
    srv.add_argument("--data", default=_env("DATA"), help="dataset file to serve")
    srv.add_argument("--gamma", type=float, default=_env("GAMMA"))
    srv.add_argument("--beta", type=float, default=_env("BETA"))
    srv.add_argument("--delta", type=float, default=_env("DELTA"))
    srv.add_argument("--top-n", type=int, default=_env("TOP_N"))
    srv.add_argument("--save-on-write", action="store_true",
                     help="write accepted changes back to the dataset file")

    return parser


def _override_thresholds(conf, args):
    changes = {}
    if args.gamma is not None:
        changes["gamma"] = float(args.gamma)
    if args.beta is not None:
        changes["beta"] = float(args.beta)
    if args.delta is not None:
        changes["delta"] = float(args.delta)
    if getattr(args, "top_n", None) is not None:
        changes["top_n"] = int(args.top_n)
    if not changes:
        return conf
    return replace(conf, thresholds=replace(conf.thresholds, **changes))


def _cmd_generate(args) -> int:
    cfg = GeneratorConfig(
        seed=args.seed,
        n_participants=args.participants,
        n_presenters=args.presenters,
        n_sessions=args.sessions,
        tag_vocabulary=args.tags,
        rating_density=args.density,
        max_contact_duration=args.max_duration,
        max_contact_frequency=args.max_frequency,
        frame_t=args.frame,
        n_locations=args.locations,
        availability_coverage=args.coverage,
    )
    conf = generate(cfg)
    dataio.save(conf, args.out)
    print(f"wrote {args.out}: {len(conf.roster)} participants, "
          f"{len(conf.presenters)} presenters, {len(conf.sessions)} sessions")
    return EXIT_OK


def _cmd_validate(args) -> int:
    conf = dataio.parse(args.file)
    violations = validate(conf)
    for v in violations:
        print(v)
    if violations:
        print(f"{len(violations)} violation(s)")
        return EXIT_INVALID
    print("ok")
    return EXIT_OK


def _format_gates(gv) -> str:
    parts = []
    if gv.pearson is not None:
        parts.append(f"pearson={gv.pearson:.4f}")
    if gv.tie_strength is not None:
        parts.append(f"tie={gv.tie_strength:.4f}")
    if gv.degree_centrality is not None:
        parts.append(f"centrality={gv.degree_centrality:.4f}")
    return " ".join(parts)


def _cmd_recommend(args) -> int:
    conf = _override_thresholds(dataio.load(args.file), args)
    if args.participant not in conf.roster:
        print(f"unknown participant {args.participant!r}", file=sys.stderr)
        return EXIT_INVALID
    th = conf.thresholds
    print(f"participant {args.participant} "
          f"(gamma={th.gamma} beta={th.beta} delta={th.delta} top_n={th.top_n})")
    lists = recommend_for(conf, args.participant, strict=args.strict)
    for channel in BOTH_CHANNELS:
        print(f"\n{channel.value}:")
        recs = lists[channel]
        if not recs:
            print("  (none)")
        for rank, rec in enumerate(recs, start=1):
            s = rec.session
            ex = rec.explanation
            kinds = ", ".join(sorted(k.value for k in ex.relation_kinds))
            print(f"  {rank}. {s.session_id}  {s.location} {s.slot.start}-{s.slot.end}"
                  f"  presenter {s.presenter}  score {rec.score:.4f}")
            print(f"     gates: {_format_gates(ex.gate_values)}; "
                  f"matched {ex.matched_slot.location} "
                  f"{ex.matched_slot.slot.start}-{ex.matched_slot.slot.end}; "
                  f"relations: {kinds}")
    return EXIT_OK


def _cmd_evaluate(args) -> int:
    conf = dataio.load(args.file)
    try:
        grid = [float(v) for v in args.grid.split(",") if v.strip()]
    except ValueError:
        print(f"bad --grid value: {args.grid!r}", file=sys.stderr)
        return EXIT_IO
    dataset_id = Path(args.file).name
    train, labels = split(conf, SplitSpec(train_fraction=args.train_fraction,
                                          seed=args.split_seed))

    channels = (
        BOTH_CHANNELS
        if args.channel == "both"
        else (Channel(args.channel),)
    )
    reports = [
        sweep(train, labels, channel, grid, dataset_id=dataset_id)
        for channel in channels
    ]
    write_sweep_csv(reports, args.out)

    ablation = ablation_report(train, labels, dataset_id=dataset_id)
    text = render_ablation_text(ablation)
    text_path = Path(args.out).with_suffix(Path(args.out).suffix + ".txt")
    text_path.write_text(text, encoding="utf-8", newline="\n")

    print(f"wrote {args.out} ({sum(len(r.points) for r in reports)} sweep points) "
          f"and {text_path}")
    print(text, end="")
    return EXIT_OK


def _cmd_serve(args) -> int:
    if not args.data:
        print("serve: --data (or CONFREC_DATA) is required", file=sys.stderr)
        return EXIT_IO
    import logging

    import uvicorn

    from confrec.service import create_app

    conf = _override_thresholds(dataio.load(args.data), args)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(message)s"))
    logger = logging.getLogger("confrec.service")
    logger.addHandler(handler)
    logger.setLevel(logging.INFO)

    save_path = args.data if args.save_on_write else None
    app = create_app(conf, save_path=save_path)
    host, _, port = args.listen.rpartition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port), log_level="warning")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "generate": _cmd_generate,
        "validate": _cmd_validate,
        "recommend": _cmd_recommend,
        "evaluate": _cmd_evaluate,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except ValidationError as exc:
        for violation in exc.violations:
            print(violation, file=sys.stderr)
        return EXIT_INVALID
    except (dataio.ParseError, OSError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
