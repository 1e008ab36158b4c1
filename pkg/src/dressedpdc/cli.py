"""Command line entry point: ``dressedpdc <spectrum|sweep-intensity|propagate|paper-check>``.

Exit codes: 0 success, 2 scenario or usage error, 3 physics-domain or
integration error, 4 I/O error.
"""

import argparse
import json
import sys

import numpy as np

from .errors import DomainError, IntegrationError, InsufficientGrowthError, ScenarioError
from .gain import GainOptions, SidebandComponent
from .scenario import load_scenario, preset_names
from .serialization import FORMATS, dumps_json, emit
from .sweeps import format_report, paper_check, propagation_result, run_intensity_sweep, run_propagation, run_spectrum

EXIT_OK, EXIT_SCENARIO, EXIT_DOMAIN, EXIT_IO = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_SCENARIO, f"{self.prog}: error: {message}\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", default="paper_s3", help=f"scenario file or preset ({', '.join(preset_names())})")
    common.add_argument("--component", default="all", choices=["ordinary", "blue", "red", "all"])
    common.add_argument("--out", help="output path (default: JSON to stdout)")
    common.add_argument("--format", default="json", choices=FORMATS)
    common.add_argument("--allow-degenerate", action="store_true", help="keep w_s = w_p/2 on the signal grid")
    common.add_argument("--detuning-unit", choices=["hz", "rads"], help="reinterpret the scenario detuning")
    common.add_argument("--red-alt-form", action="store_true", help="use |D + R'/2| in the red coefficient")

    parser = _Parser(prog="dressedpdc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("spectrum", parents=[common], help="coefficients across the signal grid")
    sweep = sub.add_parser("sweep-intensity", parents=[common], help="coefficients against pump intensity")
    sweep.add_argument("--intensity-min", type=float, default=1e-2, help="W/cm^2")
    sweep.add_argument("--intensity-max", type=float, default=1e10, help="W/cm^2")
    sweep.add_argument("--count", type=int, default=121, help="log-spaced points")
    prop = sub.add_parser("propagate", parents=[common], help="analytic and coupled propagation through the cell")
    prop.add_argument("--seed-signal", type=complex, default=1.0)
    prop.add_argument("--seed-idler", type=complex, default=0.0)
    prop.add_argument("--step", type=float, help="RK4 step in cm (default: automatic)")
    check = sub.add_parser("paper-check", parents=[common], help="reference scenario under every unit reading")
    check.add_argument("--theta", type=float, help="superposition angle in rad")
    return parser


def _scenario(args):
    scenario = load_scenario(args.scenario)
    if args.detuning_unit:
        scenario = scenario.with_detuning_unit(args.detuning_unit)
    return scenario


def _components(args, scenario):
    if args.component == "all":
        return None if args.command == "spectrum" else tuple(SidebandComponent)
    return (SidebandComponent(args.component),)


def _write(result, args, comments=()):
    if args.out:
        emit(result, args.format, args.out, comments)
    elif args.format == "json":
        sys.stdout.write(dumps_json(result))
    else:
        from .serialization import dumps_csv, dumps_plotdata

        sys.stdout.write(dumps_csv(result) if args.format == "csv" else dumps_plotdata(result, comments))


def _run(args):
    options = GainOptions(red_alt_form=args.red_alt_form)
    if args.command == "paper-check":
        scenario = _scenario(args)
        report = paper_check(scenario, theta=args.theta, options=options)
        print(format_report(report))
        if args.out:
            with open(args.out, "w") as fh:
                json.dump(report, fh, sort_keys=True, indent=1)
                fh.write("\n")
        return EXIT_OK

    scenario = _scenario(args)
    if args.command == "spectrum":
        result = run_spectrum(scenario, _components(args, scenario), args.allow_degenerate, options)
        _write(result, args)
    elif args.command == "sweep-intensity":
        if args.count < 2 or not 0 < args.intensity_min < args.intensity_max:
            raise ScenarioError("need 0 < --intensity-min < --intensity-max and --count >= 2")
        grid = np.geomspace(args.intensity_min, args.intensity_max, args.count)
        result = run_intensity_sweep(scenario, grid, components=_components(args, scenario), options=options)
        _write(result, args)
    elif args.command == "propagate":
        if args.component == "all":
            raise ScenarioError("propagate needs a single --component (ordinary, blue or red)")
        analytic, coupled, summary = run_propagation(
            scenario, args.component, (args.seed_signal, args.seed_idler), args.step, options
        )
        result = propagation_result(analytic, coupled, summary)
        comments = [f"{k} = {v}" for k, v in sorted(summary.items())] + [
            "gain in dB is 20*log10 of the signal amplitude ratio"
        ]
        _write(result, args, comments)
        print(
            f"{summary['component']}: coefficient {summary['coefficient_cm-1']:.6g} cm^-1, "
            f"analytic gain {summary['analytic_gain_dB']:.6g} dB, coupled gain {summary['coupled_gain_dB']:.6g} dB, "
            f"rate discrepancy {summary['rate_discrepancy_relative']:.3g}",
            file=sys.stderr,
        )
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return EXIT_SCENARIO
    except (DomainError, IntegrationError, InsufficientGrowthError) as exc:
        print(f"physics error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
