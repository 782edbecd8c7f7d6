"""Batch command-line front-end.

Commands: ``c6``, ``c3``, ``verify``, ``oracle``, ``sweep``.  Every
command reads one configuration file, prints a human-readable report to
stdout and optionally writes a CSV (comma separated, '.' decimals, LF
line endings, units in the header row).

Exit codes: 0 success, 2 configuration error, 3 convergence error,
4 criterion failure.
"""

import argparse
import csv
import sys

import numpy as np

from . import __version__
from .config import parse_config
from .dispersion import StressChoice, c3, c6, force, potential
from .errors import ConfigError, ConvergenceError, DivergentIntegralError
from .materials import scale_susceptibility
from .oracles import MonteCarloSpec, at_medium_mc, hamaker_lattice_sum
from .polarisability import MediumSpec, SphereSpec
from .quadrature import QuadratureSpec, integrate_semiinfinite
from .verification import check_correspondence, check_duality, check_microscopic

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CONVERGENCE = 3
EXIT_CRITERION = 4

_CHOICES = {"abraham": [StressChoice.ABRAHAM],
            "maxwell": [StressChoice.MAXWELL],
            "both": [StressChoice.ABRAHAM, StressChoice.MAXWELL]}


def _warn_small_sphere_regime(system):
    limit = 5.0 * max(system.sphere1.radius, system.sphere2.radius)
    if system.separation < limit:
        print(f"warning: separation {system.separation:g} m is below 5x the "
              f"largest sphere radius; the small-sphere closed forms degrade "
              f"at such distances", file=sys.stderr)


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            # str() keeps full float precision, so the file parses back
            # to bit-identical values
            writer.writerow([str(v) for v in row])


def _load(args):
    config = parse_config(args.config)
    if getattr(args, "tolerance", None) is not None:
        config.quadrature = QuadratureSpec(config.quadrature.scale,
                                           args.tolerance,
                                           config.quadrature.max_doublings)
    if getattr(args, "seed", None) is not None:
        config.mc = MonteCarloSpec(config.mc.samples, args.seed,
                                   config.mc.chunks)
    return config


def cmd_c6(args):
    config = _load(args)
    system = config.system(args.r12)
    _warn_small_sphere_regime(system)
    r12 = system.separation

    print(f"two-sphere dispersion coefficient at r12 = {r12:.6e} m")
    header = ["choice", "C6_electric (J*m^6)", "C6_magnetic (J*m^6)",
              "C6_total (J*m^6)", "quad_error (J*m^6)", "U (J)", "F (N)"]
    rows = []
    for choice in _CHOICES[args.choice]:
        breakdown = c6(system, choice, config.quadrature)
        rows.append([choice.value, breakdown.electric_term,
                     breakdown.magnetic_term, breakdown.total,
                     breakdown.quadrature_error_estimate,
                     potential(breakdown.total, r12), force(breakdown.total, r12)])
    _print_table(header, rows)
    if args.output:
        _write_csv(args.output, header, rows)
    return EXIT_OK


def cmd_c3(args):
    config = _load(args)
    print("sphere-mirror dispersion coefficient")
    header = ["choice", "C3 (J*m^3)", "quad_error (J*m^3)"]
    rows = []
    for choice in _CHOICES[args.choice]:
        value, err = c3(config.sphere1, config.medium, choice, config.quadrature)
        rows.append([choice.value, value, err])
    _print_table(header, rows)
    if args.output:
        _write_csv(args.output, header, rows)
    return EXIT_OK


def _print_table(header, rows):
    def fmt(v):
        return f"{v:.6e}" if isinstance(v, float) else str(v)
    widths = [max(len(header[i]), max((len(fmt(r[i])) for r in rows), default=0))
              for i in range(len(header))]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(fmt(v).ljust(w) for v, w in zip(row, widths)))


def _verify_duality(config, args):
    try:
        system = config.system(args.r12)
    except ConfigError:
        # the coefficients do not depend on the separation, any legal
        # value serves for the invariance check
        system = config.system(10.0 * (config.sphere1.radius + config.sphere2.radius))
    report = check_duality(system, config.quadrature)
    print("duality check: exchange every eps with the matching mu")
    for choice in StressChoice:
        print(f"  {choice.value:8s} C6 = {report.original[choice].total:+.9e}  "
              f"dual = {report.dual[choice].total:+.9e}  "
              f"relative delta = {report.relative_delta[choice]:.3e}  "
              f"{'invariant' if report.invariant[choice] else 'NOT invariant'}")
    print(f"  result: {'PASS' if report.passed else 'FAIL'} "
          f"(Abraham invariance required)")
    return report.passed


def _verify_correspondence(config, args):
    if "species1" not in config.species or "species2" not in config.species:
        raise ConfigError("correspondence needs [species1] and [species2]")
    alpha1 = config.species["species1"].polarisability
    alpha2 = config.species["species2"].polarisability
    report = check_correspondence(alpha1, alpha2, config.quadrature)
    print("correspondence check: vacuum point limit vs molecular pair coefficient")
    print(f"  van der Waals C6 = {report.vdw_c6:+.9e} J*m^6")
    for choice in StressChoice:
        print(f"  {choice.value:8s} point-limit C6 = {report.point_limit_c6[choice]:+.9e}  "
              f"relative delta = {report.relative_delta[choice]:.3e}  "
              f"{'match' if report.matches[choice] else 'NO match'}")
    print(f"  result: {'PASS' if report.passed else 'FAIL'}")
    return report.passed


def _verify_microscopic(config, args):
    reports = check_microscopic(radius1=config.sphere1.radius,
                                radius2=config.sphere2.radius)
    print("microscopic check: susceptibility expansion of the integrand")
    for choice, rep in reports.items():
        print(f"  {choice.value:8s} degree-2 max rel error = "
              f"{rep.degree2_max_rel_error:.3e} "
              f"({'pairwise terms match' if rep.hamaker_match else 'MISMATCH'}), "
              f"triplet ratio = {rep.third_order_ratio:.6f} "
              f"({'matches' if rep.three_particle_match else 'off'})")
    abraham = reports[StressChoice.ABRAHAM]
    passed = abraham.hamaker_match and abraham.three_particle_match
    print(f"  result: {'PASS' if passed else 'FAIL'} "
          f"(Abraham must match both orders)")
    return passed


def cmd_verify(args):
    config = _load(args)
    checks = {"duality": _verify_duality,
              "correspondence": _verify_correspondence,
              "microscopic": _verify_microscopic}
    passed = checks[args.criterion](config, args)
    return EXIT_OK if passed else EXIT_CRITERION


def cmd_oracle(args):
    config = _load(args)
    if args.which == "quadrature":
        scale = config.quadrature.scale
        reference = np.pi * scale / 2.0
        value, err = integrate_semiinfinite(
            lambda xi: scale ** 2 / (scale ** 2 + xi ** 2), config.quadrature)
        deviation = abs(value - reference) / reference
        print("quadrature oracle: arctangent reference integral")
        print(f"  computed  {value:.12e}")
        print(f"  analytic  {reference:.12e}")
        print(f"  relative deviation {deviation:.3e}, error estimate {err:.3e}")
        return EXIT_OK

    system = config.system(args.r12)
    r12 = system.separation
    radius1, radius2 = config.sphere1.radius, config.sphere2.radius
    if args.which == "hamaker":
        pitch = min(radius1, radius2) / args.pitch_fraction
        g = hamaker_lattice_sum(radius1, radius2, r12, pitch)
        volumes = (4.0 * np.pi / 3.0) ** 2 * radius1 ** 3 * radius2 ** 3
        ratio = g * r12 ** 6 / volumes
        print("hamaker oracle: lattice pair sum vs point-dipole limit")
        print(f"  G*r12^6/(V1*V2) = {ratio:.6f} (1 in the asymptotic limit)")
        print(f"  relative deviation {abs(ratio - 1.0):.3e} at r12/Rmax = "
              f"{r12 / max(radius1, radius2):.2f}")
        return EXIT_OK
    if args.which == "axilrod-teller":
        estimate, stderr = at_medium_mc(r12, radius1, radius2, config.mc)
        target = 8.0 * np.pi / 3.0 / r12 ** 6
        sigmas = abs(estimate - target) / stderr if stderr > 0 else float("inf")
        print("axilrod-teller oracle: medium integral of the triplet kernel")
        print(f"  I*r12^6   = {estimate * r12 ** 6:.6f} +- {stderr * r12 ** 6:.6f}")
        print(f"  target 8*pi/3 = {target * r12 ** 6:.6f}")
        print(f"  relative deviation {abs(estimate - target) / target:.3e} "
              f"({sigmas:.2f} standard errors)")
        return EXIT_OK
    raise ConfigError(f"unknown oracle {args.which!r}")


def _sweep_points(args):
    if args.steps < 2:
        raise ConfigError("sweep needs steps >= 2")
    if not (args.start > 0.0 and args.stop > 0.0):
        raise ConfigError("sweep range must be positive")
    if args.log:
        return np.geomspace(args.start, args.stop, args.steps)
    return np.linspace(args.start, args.stop, args.steps)


def cmd_sweep(args):
    config = _load(args)
    points = _sweep_points(args)
    unit = {"r12": "m", "density": "1", "radius": "m"}[args.variable]
    header = [f"{args.variable} ({unit})",
              "C6_Abraham (J*m^6)", "C6_Maxwell (J*m^6)",
              "U_Abraham (J)", "U_Maxwell (J)",
              "F_Abraham (N)", "F_Maxwell (N)"]
    rows = []
    for value in points:
        system = _sweep_system(config, args, float(value))
        row = [float(value)]
        totals = {}
        for choice in (StressChoice.ABRAHAM, StressChoice.MAXWELL):
            totals[choice] = c6(system, choice, config.quadrature).total
        row += [totals[StressChoice.ABRAHAM], totals[StressChoice.MAXWELL]]
        row += [potential(totals[ch], system.separation)
                for ch in (StressChoice.ABRAHAM, StressChoice.MAXWELL)]
        row += [force(totals[ch], system.separation)
                for ch in (StressChoice.ABRAHAM, StressChoice.MAXWELL)]
        rows.append(row)
    _print_table(header, rows)
    if args.output:
        _write_csv(args.output, header, rows)
    return EXIT_OK


def _sweep_system(config, args, value):
    from .dispersion import TwoSphereSystem

    if args.variable == "r12":
        return config.system(value)
    if args.variable == "density":
        medium = MediumSpec(scale_susceptibility(config.medium.permittivity, value),
                            scale_susceptibility(config.medium.permeability, value))
        return TwoSphereSystem(config.sphere1, config.sphere2, medium,
                               _require_r12(config, args))
    if args.variable == "radius":
        s1 = SphereSpec(value, config.sphere1.permittivity, config.sphere1.permeability)
        s2 = SphereSpec(value, config.sphere2.permittivity, config.sphere2.permeability)
        try:
            return TwoSphereSystem(s1, s2, config.medium, _require_r12(config, args))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    raise ConfigError(f"unknown sweep variable {args.variable!r}")


def _require_r12(config, args):
    if args.r12 is not None:
        return args.r12
    if config.separation is not None:
        return config.separation
    raise ConfigError("this sweep needs a separation; set [system] separation "
                      "or pass --r12")


def _add_common(sub):
    sub.add_argument("--config", required=True, help="configuration file (INI)")
    sub.add_argument("--output", help="write results as CSV to this path")
    sub.add_argument("--tolerance", type=float,
                     help="override the quadrature relative tolerance")
    sub.add_argument("--seed", type=int, help="override the Monte Carlo seed")
    sub.add_argument("--r12", type=float,
                     help="centre-to-centre separation in m (overrides config)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spheredisp",
        description="Dispersion coefficients for small spheres in a medium, "
                    "Abraham vs Maxwell stress tensor")
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("c6", help="two-sphere C6, potential and force")
    _add_common(sub)
    sub.add_argument("--choice", choices=sorted(_CHOICES), default="both")
    sub.set_defaults(func=cmd_c6)

    sub = subparsers.add_parser("c3", help="sphere-mirror C3")
    _add_common(sub)
    sub.add_argument("--choice", choices=sorted(_CHOICES), default="both")
    sub.set_defaults(func=cmd_c3)

    sub = subparsers.add_parser("verify", help="run one discriminating criterion")
    _add_common(sub)
    sub.add_argument("--criterion", required=True,
                     choices=["duality", "correspondence", "microscopic"])
    sub.set_defaults(func=cmd_verify)

    sub = subparsers.add_parser("oracle", help="run an oracle against its target")
    _add_common(sub)
    sub.add_argument("--which", required=True,
                     choices=["hamaker", "axilrod-teller", "quadrature"])
    sub.add_argument("--pitch-fraction", type=float, default=20.0,
                     help="lattice pitch = min(R1,R2)/fraction (default 20)")
    sub.set_defaults(func=cmd_oracle)

    sub = subparsers.add_parser("sweep", help="sweep a variable, emit CSV columns")
    _add_common(sub)
    sub.add_argument("--variable", required=True,
                     choices=["r12", "density", "radius"])
    sub.add_argument("--start", type=float, required=True)
    sub.add_argument("--stop", type=float, required=True)
    sub.add_argument("--steps", type=int, required=True)
    sub.add_argument("--log", action="store_true", help="logarithmic spacing")
    sub.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConvergenceError, DivergentIntegralError) as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
