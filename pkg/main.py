"""
suploc - Main entry point

Simulates self-similar processes with stationary increments, estimates the
location of the supremum (and of the largest jump), the mean measure of
local maxima, and checks all of it against the closed-form spectral laws.
"""

import argparse
import logging
import os
import sys
from datetime import datetime
from operator import attrgetter

import numpy as np

from utils.defaults import Defaults
from utils.errors import DomainError, SuplocError, UsageError
from utils.artifacts import read_csv, run_directory, write_csv, write_json
from utils.manifest import FIELDS, ExperimentManifest
from simulation import default_workers, map_replicates
from locations import LocalMaxCloud
from spectral import (
    DensityCurve,
    basis_density,
    basis_density_reversible,
    check_shape_constraints,
    default_v_grid,
    entropy_bound,
    reversible_bound,
    stationary_bound,
)
from mixture_inverse import fit_mixture, reversible_v_grid
from empirics import (
    BetaLaw,
    CloudTask,
    EmpiricalNu,
    LocationTask,
    NuTask,
    Verdict,
    bound_compliance,
    estimate_location_density,
    fit_beta_moments,
    frame_identity_check,
    frame_thresholds,
    ks_test,
    levy_factorization_check,
    reversibility_check,
    u_marginal_tail_exponent,
)
from empirics.nu import check_threshold_floor

logger = logging.getLogger('suploc')

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

SPECTRAL_CURVES = ('basis', 'reversible', 'entropy')


class ExperimentRunner:
    """Runs one manifest, writes its artifacts and collects verdicts."""

    def __init__(self, manifest, workers=1):
        """
        Initialize the runner.

        Args:
            manifest: ExperimentManifest to execute
            workers: Size of the replicate worker pool
        """
        self.manifest = manifest
        self.workers = workers
        self.tolerances = manifest.tolerances
        self.out_dir = None
        self.verdicts = []
        self.artifacts = []
        self.handlers = {
            'simulate': self._simulate,
            'tau': self._tau,
            'jump': self._jump,
            'nu': self._nu,
            'levy-check': self._levy_check,
            'spectral': self._spectral,
            'fit': self._fit,
            'bound-check': self._bound_check,
        }

    def run(self):
        """
        Execute the analysis.

        Returns:
            EXIT_PASS if every verdict passed, EXIT_FAIL otherwise
        """
        m = self.manifest
        self.out_dir = run_directory(m.out, label=m.analysis.replace('-', '_'))
        m.save(self._path('manifest.json'))
        self.handlers[m.analysis]()
        return self.finish()

    def finish(self, error=None):
        """Write verdict.json, print the verdict lines and pick the exit code."""
        passed = error is None and all(v.passed for v in self.verdicts)
        report = {
            'analysis': self.manifest.analysis,
            'passed': passed,
            'verdicts': [v.to_dict() for v in self.verdicts],
            'artifacts': self.artifacts,
        }
        if error is not None:
            report['error'] = {'type': type(error).__name__, 'message': str(error),
                               'report': getattr(error, 'report', None)}
        write_json(report, self._path('verdict.json'))
        for verdict in self.verdicts:
            status = "PASS" if verdict.passed else "FAIL"
            print(f"{status} {verdict.name}: statistic={verdict.statistic:.6g} "
                  f"threshold={verdict.threshold:.6g}")
        print(f"{'PASSED' if passed else 'FAILED'} ({self.manifest.analysis}), artifacts in {self.out_dir}")
        return EXIT_PASS if passed else EXIT_FAIL

    def _path(self, name):
        return os.path.join(self.out_dir, name)

    def _write_csv(self, name, rows, columns):
        self.artifacts.append(name)
        return write_csv(rows, columns, self._path(name))

    def _write_json(self, name, data):
        self.artifacts.append(name)
        return write_json(data, self._path(name))

    # Monte Carlo helpers

    def _replicates(self, task, point_process=False):
        spec = self.manifest.sim_spec(point_process)
        return spec, map_replicates(spec, task, workers=self.workers)

    def _location_run(self, kind):
        spec, samples = self._replicates(LocationTask(kind))
        self._write_csv(
            'samples.csv',
            [(i, s.value, int(s.at_zero), int(s.at_one)) for i, s in enumerate(samples)],
            ('replicate', 'value', 'at_zero', 'at_one'),
        )
        density = estimate_location_density(samples, self.manifest.bins)
        self._write_csv('density.csv', density.to_rows(), ('t', 'height', 'se'))
        logger.info("%s", density)
        return spec, samples, density

    def _bound_verdicts(self, spec, density):
        self.verdicts.append(bound_compliance(density, entropy_bound))
        if spec.time_reversible:
            self.verdicts.append(bound_compliance(density, reversible_bound))

    # Analyses

    def _simulate(self):
        spec, paths = self._replicates(attrgetter('values'))
        times = spec.grid.times()
        rows = [(i, t, x) for i, values in enumerate(paths) for t, x in zip(times, values)]
        self._write_csv('paths.csv', rows, ('replicate', 't', 'x'))

    def _tau(self):
        spec, samples, density = self._location_run('supremum')
        self._bound_verdicts(spec, density)
        if spec.time_reversible:
            self.verdicts.append(reversibility_check(samples))
        if spec.family == 'brownian' or (spec.family == 'fbm' and spec.hurst == 0.5):
            self._arcsine_verdict(samples)
        if spec.family in ('brownian', 'stable_levy'):
            self._levy_law_verdicts(spec, samples, density)

    def _arcsine_verdict(self, samples):
        ks = ks_test(samples, BetaLaw.arcsine().cdf)
        limit = self.tolerances['ks_max']
        details = ks.to_dict()
        details.pop('pass')
        self.verdicts.append(Verdict('ks_arcsine', ks.statistic, limit, ks.statistic <= limit, details))

    def _levy_law_verdicts(self, spec, samples, density):
        boundary = density.mass_at_0 + density.mass_at_1
        limit = self.tolerances['boundary_mass']
        if spec.beta == 0.0:
            self.verdicts.append(Verdict('boundary_mass', boundary, limit, boundary <= limit))
        if boundary > limit:
            logger.warning("boundary mass %.4f too large for a Beta fit, skipped", boundary)
            return
        law = fit_beta_moments(samples)
        gap = abs(law.a + law.b - 1.0)
        self.verdicts.append(Verdict('beta_sum', gap, self.tolerances['beta_sum'],
                                     gap <= self.tolerances['beta_sum'], law.to_dict()))
        if spec.beta == 0.0:
            asym = abs(law.a - law.b)
            self.verdicts.append(Verdict('beta_asymmetry', asym, self.tolerances['beta_asymmetry'],
                                         asym <= self.tolerances['beta_asymmetry'], law.to_dict()))

    def _jump(self):
        kind = 'largest_drawdown' if self.manifest.drawdown else 'largest_jump'
        _, _, density = self._location_run(kind)
        self.verdicts.append(bound_compliance(density, entropy_bound))

    def _bound_check(self):
        spec, _, density = self._location_run('supremum')
        self._bound_verdicts(spec, density)
        report = check_shape_constraints(density.to_curve(), n_se=Defaults.N_SE)
        self.verdicts.append(Verdict('shape_constraints', report.pairwise_margin, 0.0,
                                     report.passed, report.to_dict()))

    def _nu(self):
        thresholds = frame_thresholds(Defaults.FRAME_T_VALUES)
        spec = self.manifest.sim_spec(point_process=True)
        check_threshold_floor(thresholds, spec.grid.step)
        results = map_replicates(spec, NuTask(thresholds), workers=self.workers)
        nu = EmpiricalNu(thresholds)
        for counts, dropped, _ in results:
            nu.add(counts, dropped)
        self._write_csv('nu.csv', nu.to_rows(), ('t', 'r', 'nu', 'se', 'dropped'))
        density = estimate_location_density([r[2] for r in results], self.manifest.bins)
        self._write_csv('density.csv', density.to_rows(), ('t', 'height', 'se'))
        self.verdicts.append(frame_identity_check(nu, density, rel_tol=self.tolerances['frame_relative']))

    def _levy_check(self):
        spec, clouds = self._replicates(CloudTask(), point_process=True)
        if self.manifest.clouds:
            self._write_csv(
                'clouds.csv',
                [row for i, cloud in enumerate(clouds) for row in cloud.to_rows(replicate=i)],
                ('replicate',) + LocalMaxCloud.COLUMNS,
            )
        report = levy_factorization_check(clouds)
        exponent = u_marginal_tail_exponent(clouds)
        summary = report.to_dict()
        summary['u_exponent'] = exponent
        summary['predicted_law'] = report.predicted_law().to_dict() if report.c1 < 1 and report.c2 < 1 else None
        self._write_json('levy.json', summary)
        if spec.family in ('brownian', 'stable_levy'):
            gap = abs(report.exponent_sum - 1.0)
            self.verdicts.append(Verdict('levy_sum', gap, self.tolerances['levy_sum'],
                                         gap <= self.tolerances['levy_sum'], summary))
        gap = abs(exponent - 1.0)
        self.verdicts.append(Verdict('u_exponent', gap, self.tolerances['u_exponent'],
                                     gap <= self.tolerances['u_exponent'], {'exponent': exponent}))

    def _spectral(self):
        m = self.manifest
        if m.curve not in SPECTRAL_CURVES:
            raise UsageError(f"unknown curve '{m.curve}', expected one of {SPECTRAL_CURVES}")
        if int(m.points) < 2:
            raise UsageError("--points must be at least 2")
        t = (np.arange(int(m.points)) + 0.5) / int(m.points)
        if m.curve == 'basis':
            values, bound = basis_density(m.v, t), entropy_bound(t)
        elif m.curve == 'reversible':
            values, bound = basis_density_reversible(m.v, t), reversible_bound(t)
        else:
            values, bound = entropy_bound(t), stationary_bound(t)
        self._write_csv('spectral.csv', list(zip(t, values, bound)), ('t', 'value', 'bound'))
        ratio = float(np.max(values / bound))
        self.verdicts.append(Verdict('below_bound', ratio, 1.0, ratio <= 1.0 + Defaults.NUMERIC_TOL))
        report = check_shape_constraints(DensityCurve(t, values))
        self.verdicts.append(Verdict('shape_constraints', report.pairwise_margin, 0.0,
                                     report.passed, report.to_dict()))

    def _fit(self):
        m = self.manifest
        if not m.input:
            raise UsageError("fit needs --input with a (t, value) CSV")
        if not os.path.exists(m.input):
            raise UsageError(f"input not found: {m.input}")
        frame = read_csv(m.input)
        value_column = next((c for c in ('height', 'value', 'f') if c in frame.columns), None)
        t_column = 't' if 't' in frame.columns else frame.columns[0]
        if value_column is None:
            value_column = frame.columns[1]
        curve = DensityCurve(frame[t_column].to_numpy(), frame[value_column].to_numpy())
        v_grid = reversible_v_grid(m.atoms) if m.reversible else default_v_grid(m.atoms)
        measure, report = fit_mixture(curve, v_grid, mass_cap=m.mass_cap,
                                      damping=m.damping, reversible=bool(m.reversible))
        self._write_csv('mixture.csv', measure.to_rows(), ('v', 'mass'))
        self._write_csv(
            'reproduced.csv',
            list(zip(curve.t_grid, curve.f_values, report.reproduced.f_values)),
            ('t', 'value', 'fitted'),
        )
        self._write_json('fit.json', report.to_dict())
        cap = m.mass_cap if m.mass_cap is not None else np.inf
        self.verdicts.append(Verdict('mass_cap', report.total_mass, cap,
                                     report.total_mass <= cap + Defaults.MASS_TOL))


def build_parser():
    """Argument parser with one subcommand per analysis."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--manifest', help="JSON manifest; flags override its values")
    common.add_argument('--family', choices=('fbm', 'stable_levy', 'brownian'))
    common.add_argument('--n', type=int, help="grid steps per unit time")
    common.add_argument('--reps', type=int, help="number of replicates")
    common.add_argument('--seed', type=int, help="master seed")
    common.add_argument('--hurst', type=float, help="Hurst exponent (fbm)")
    common.add_argument('--alpha', type=float, help="stability index (stable_levy)")
    common.add_argument('--beta', type=float, help="skewness (stable_levy)")
    common.add_argument('--window', type=float, help="point-process window [-W, 1 + W]")
    common.add_argument('--bins', type=int, help="histogram bins")
    common.add_argument('--workers', type=int,
                        help=f"worker pool size (default ${Defaults.WORKERS_ENV} or 1)")
    common.add_argument('--out', help="output directory")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true')
    verbosity.add_argument('--quiet', action='store_true')

    parser = argparse.ArgumentParser(
        prog='suploc',
        description="Location of the supremum of self-similar processes with stationary increments.",
    )
    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser('simulate', parents=[common], help="write simulated paths")
    commands.add_parser('tau', parents=[common], help="supremum location law")
    jump = commands.add_parser('jump', parents=[common], help="largest jump location law")
    jump.add_argument('--drawdown', action='store_const', const=True,
                      help="locate the largest downward increment instead")
    commands.add_parser('nu', parents=[common], help="local-maxima measure vs location density")
    levy = commands.add_parser('levy-check', parents=[common], help="product form and tail exponents")
    levy.add_argument('--clouds', action=argparse.BooleanOptionalAction, default=None,
                      help="write the local-maxima point clouds to clouds.csv (default on)")
    spectral = commands.add_parser('spectral', parents=[common], help="closed-form curves")
    spectral.add_argument('--curve', choices=SPECTRAL_CURVES)
    spectral.add_argument('--v', type=float, help="atom location")
    spectral.add_argument('--points', type=int, help="number of t points")
    fit = commands.add_parser('fit', parents=[common], help="recover the mixing measure")
    fit.add_argument('--input', help="density CSV with columns t and height/value")
    fit.add_argument('--atoms', type=int, help="number of v atoms")
    fit.add_argument('--mass-cap', type=float, dest='mass_cap')
    fit.add_argument('--damping', type=float)
    fit.add_argument('--reversible', action='store_const', const=True)
    commands.add_parser('bound-check', parents=[common], help="bounds and shape constraints")
    return parser


def configure_logging(args):
    level = logging.INFO
    if getattr(args, 'verbose', False):
        level = logging.DEBUG
    elif getattr(args, 'quiet', False):
        level = logging.WARNING
    logging.basicConfig(level=level, format='%(asctime)s %(name)s %(levelname)s: %(message)s')


def build_manifest(args):
    """Manifest from --manifest (if any) with the given flags applied on top."""
    if args.manifest:
        base = ExperimentManifest.load(args.manifest)
        base = ExperimentManifest(args.command, base.params, base.tolerances, base.timestamp)
    else:
        base = ExperimentManifest(args.command,
                                  timestamp=datetime.now().isoformat(timespec='seconds'))
    flags = {k: v for k, v in vars(args).items() if k in FIELDS}
    return base.overridden(flags)


def resolve_workers(manifest):
    workers = manifest.workers if manifest.workers is not None else default_workers()
    if int(workers) < 1:
        raise UsageError(f"--workers must be >= 1, got {workers}")
    return int(workers)


def main(argv=None):
    """Entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args)
    runner = None
    try:
        manifest = build_manifest(args)
        runner = ExperimentRunner(manifest, resolve_workers(manifest))
        return runner.run()
    except (UsageError, DomainError) as e:
        logger.error("%s", e)
        print(f"suploc: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SuplocError as e:
        logger.error("%s failed: %s", args.command, e)
        if runner is not None and runner.out_dir is not None:
            runner.finish(error=e)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
