from typing import (
    List,
    Optional,
)

import os
import sys
import argparse

from dualgame.dualgame import DualGame
from dualgame.api.models.config import ExperimentConfig


# command line parser
def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualgame",
        description="Simulate and verify explicit minimax dual control "
        "of x_next = A*x + i*u + w with unknown scaled-orthogonal A and unknown sign i.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    simulate = subparsers.add_parser("simulate", help="Simulate episodes of a configuration.")
    simulate.add_argument("--config", required=True, help="Path to JSON configuration.")
    simulate.add_argument("--output-dir", dest="output_dir", default=None,
                          help="Output directory (default: output_dir of the configuration).")
    simulate.add_argument("--excel", action="store_true", help="Also write trajectories.xlsx.")

    sync = subparsers.add_parser("sync", help="Run the synchronization example.")
    sync.add_argument("--n", type=int, default=10, help="State dimension (default: 10).")
    sync.add_argument("--noise", type=float, default=0.01, help="Disturbance std (default: 0.01).")
    sync.add_argument("--horizon", type=int, default=None, help="Number of steps (default: 4*n).")
    sync.add_argument("--seed", type=int, default=0, help="Seed (default: 0).")
    sync.add_argument("--alpha", type=float, default=1.0, help="Scale of A (default: 1).")
    sync.add_argument("--output-dir", dest="output_dir", default="output",
                      help="Output directory (default: output).")

    verify = subparsers.add_parser("verify", help="Run verification suites.")
    verify.add_argument("--suite", default="all",
                        choices=["all", "thm3", "bellman", "vi", "gamma", "policy"],
                        help="Verification suite (default: all).")
    verify.add_argument("--samples", type=int, default=20, help="Sampled states (default: 20).")
    verify.add_argument("--seed", type=int, default=0, help="Seed (default: 0).")
    verify.add_argument("--budget", type=int, default=20000,
                        help="Evaluations per optimization (default: 20000).")
    verify.add_argument("--depth", type=int, default=2,
                        help="Depth of the value iteration suite (default: 2).")
    verify.add_argument("--n", type=int, default=1, help="State dimension (default: 1).")
    verify.add_argument("--alpha", type=float, default=1.0, help="Scale of A (default: 1).")
    verify.add_argument("--output-dir", dest="output_dir", default="output",
                        help="Output directory (default: output).")

    sweep = subparsers.add_parser("sweep-gamma", help="Sweep the attenuation level around gamma_star.")
    sweep.add_argument("--alpha", type=float, default=1.0, help="Scale of A (default: 1).")
    sweep.add_argument("--points", type=int, default=21, help="Grid points (default: 21).")
    sweep.add_argument("--span", type=float, default=2.0,
                       help="Grid covers [gamma_star/span, gamma_star*span] (default: 2).")
    sweep.add_argument("--iterations", type=int, default=10**6,
                       help="Maximal t-recursion iterations (default: 1000000).")
    sweep.add_argument("--output-dir", dest="output_dir", default="output",
                       help="Output directory (default: output).")

    audit = subparsers.add_parser("audit-gain", help="Monte-Carlo audit of the gain bound.")
    audit.add_argument("--config", required=True, help="Path to JSON configuration.")
    audit.add_argument("--output-dir", dest="output_dir", default=None,
                       help="Output directory (default: output_dir of the configuration).")
    return parser


# simulate episodes
def run_simulate(args: argparse.Namespace) -> int:
    config = ExperimentConfig.from_file(args.config)
    game = DualGame(n=config.n, alpha=config.alpha, gamma=config.gamma, seed=config.seed)
    records = game.run_episodes(config)
    summary = {
        "config": config.model_dump(mode="json"),
        "runs": len(records),
        "mean_peak": records.mean_peak,
        "standard_error": records.standard_error,
        "diverged_runs": records.diverged_runs,
    }
    game.emit_outputs(
        records, args.output_dir or config.output_dir, report=summary, excel=args.excel
    )
    print(
        f"simulate: {len(records)} run(s), mean peak cost {records.mean_peak:.6g}, "
        f"{records.diverged_runs} diverged"
    )
    return 0


# synchronization example
def run_sync(args: argparse.Namespace) -> int:
    game = DualGame(n=args.n, alpha=args.alpha, seed=args.seed)
    result = game.run_sync_example(
        args.n, noise_std=args.noise, horizon=args.horizon, seed=args.seed
    )
    game.emit_sync_outputs(result, args.output_dir)
    print(
        f"sync: n = {args.n}, noise floor {result.noise_floor:.3g}, "
        f"synchronized at step {result.sync_step}"
    )
    return 0


# verification suites
def run_verify(args: argparse.Namespace) -> int:
    game = DualGame(n=args.n, alpha=args.alpha, seed=args.seed, errors="ignore")
    passed, reports = game.verify(
        args.suite,
        samples=args.samples,
        seed=args.seed,
        opt_budget=args.budget,
        depth=args.depth,
    )
    os.makedirs(args.output_dir, exist_ok=True)
    game.write_report(
        {"passed": passed, "suites": reports},
        os.path.join(args.output_dir, "report.json"),
    )
    print(f"verify {args.suite}: {'passed' if passed else 'FAILED'}")
    return 0 if passed else 1


# gamma sweep
def run_sweep_gamma(args: argparse.Namespace) -> int:
    game = DualGame(alpha=args.alpha)
    report = game.sweep_gamma(
        args.alpha, points=args.points, span=args.span, iterations=args.iterations
    )
    os.makedirs(args.output_dir, exist_ok=True)
    game.write_report(report, os.path.join(args.output_dir, "report.json"))
    game.write_plot(
        {"sup t": [e.sup_t for e in report.entries]},
        os.path.join(args.output_dir, "plot.svg"),
        log_y=True,
        title=f"sup t over gamma/gamma_star in [1/{args.span:g}, {args.span:g}]",
    )
    for e in report.entries:
        status = "bounded" if e.bounded else f"diverged at {e.diverged_at}"
        print(f"gamma = {e.gamma:.6g} ({e.ratio:.4f} gamma_star): {status}")
    return 0 if report.consistent else 1


# gain audit
def run_audit_gain(args: argparse.Namespace) -> int:
    config = ExperimentConfig.from_file(args.config)
    game = DualGame(
        n=config.n, alpha=config.alpha, gamma=config.gamma, seed=config.seed, errors="ignore"
    )
    report = game.run_gain_audit(config)
    output_dir = args.output_dir or config.output_dir
    os.makedirs(output_dir, exist_ok=True)
    game.write_report(report, os.path.join(output_dir, "report.json"))
    print(
        f"audit-gain: mean peak {report.mean_peak:.6g} +- {report.standard_error:.3g}, "
        f"bound {report.bound:.6g}, {'passed' if report.passed else 'FAILED'}"
    )
    return 0 if report.passed else 1


def main(argv: Optional[List[str]] = None) -> int:
    """
    Command line entry point. Returns 0 on success, 1 on a failed check
    and 2 on usage or configuration errors.
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    commands = {
        "simulate": run_simulate,
        "sync": run_sync,
        "verify": run_verify,
        "sweep-gamma": run_sweep_gamma,
        "audit-gain": run_audit_gain,
    }
    try:
        return commands[args.command](args)
    except (ValueError, OSError) as err:
        print(f"dualgame {args.command}: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
