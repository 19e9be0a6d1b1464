# -*- coding: utf-8 -*-

"""
cli
----------------------------------

The `secants` command. Every subcommand is a Configurable whose config table supplies the
argparse options, so defaults and help text live in one place.

Exit status: 0 when every check passed, 2 when a check failed, 1 for usage errors and bad
parameters.
"""

from __future__ import absolute_import, unicode_literals, print_function

import argparse
import io
import logging
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .charwalk import (check_range_law, increment_laws, level_stats, phi_profile, projection_profile, psi_walk,
                       verify_projection_laws)
from .construct import (build_construction, parabola_params, parse_construction, point_set_from_payload,
                        read_set_file, write_set_file)
from .ecurve import curve_count, curve_count_bruteforce, ec_spectrum_scan, hasse_holds, trace_distribution
from .errors import ColoringError, ParameterError, SecantsError
from .legit import (generate_linear_hypergraph, permute_edges, read_coloring, read_hypergraph, two_phase_coloring,
                    verify_legitimate, write_coloring)
from .output import csv_bytes, json_bytes, normalize, text_bytes
from .plane import plane_of_order
from .search import exhaustive_minmax, local_search
from .secants import Configurable, TemplateRenderMixin
from .spectrum import bounds_report, compute_spectrum, cor_ceiling, meets_cor_bound, verify_counting_identities
from .sweep import SWEEP_COLUMNS, SWEEP_SCHEMA, run_sweep

logger = logging.getLogger(__name__)

DEFAULT_TEMPLATE_ADAPTER = 'secants.template_adapters.StringFormatAdapter'

GLOBAL_DEFAULTS = {
    'seed': 0,
    'threads': 1,
    'out': None,
    'format': None,
    'verbose': 0,
    'template_adapter': DEFAULT_TEMPLATE_ADAPTER,
    'template': None,
}

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2

BRUTEFORCE_LIMIT = 101


class ArgumentParser(argparse.ArgumentParser):
    """
    argparse reports usage errors with status 2, which this tool reserves for failed checks.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))


@dataclass
class Report:
    payload: dict
    columns: tuple = None
    rows: list = None
    schema: str = None
    passed: bool = True
    exit_code: int = None


class Command(TemplateRenderMixin, Configurable):
    """
    Base for subcommands. Subclasses fill `self.config` before calling this initializer.
    """
    name = None
    help = ''
    option_types = {}
    required = ()
    choices = {}
    default_format = 'json'
    summary_templates = {}

    def __init__(self, template_adapter=DEFAULT_TEMPLATE_ADAPTER, **kwargs):
        super(Command, self).__init__(template_adapter=template_adapter, **kwargs)

    @classmethod
    def add_arguments(cls, parser):
        for key, (default, description) in sorted(cls().config.items()):
            flag = '--' + key.replace('_', '-')
            kind = cls.option_types.get(key, str if default is None else type(default))
            if kind is bool:
                parser.add_argument(flag, dest=key, action='store_true', default=argparse.SUPPRESS,
                                    help=description)
                continue
            parser.add_argument(flag, dest=key, type=kind, default=argparse.SUPPRESS, help=description,
                                required=key in cls.required, choices=cls.choices.get(key))

    def run(self, context):
        raise NotImplementedError

    def render_summary(self, payload, template=None):
        try:
            adapter = self.get_template_adapter()
        except (ImportError, AttributeError, ValueError):
            raise ParameterError('cannot load template adapter %r' % self.template_adapter)
        if template is None:
            template = self.summary_templates.get(getattr(adapter, 'syntax', 'format'), '')
        return adapter.render(template, normalize(payload))


class PlaneCommand(Command):
    name = 'plane'
    help = 'list the points or lines of PG(2, q)'
    option_types = {'q': int}
    required = ('q',)
    choices = {'dump': ('points', 'lines')}
    default_format = 'csv'
    summary_templates = {
        'format': 'PG(2,{q}): {N} points, {N} lines, {line_size} points per line',
        'mustache': 'PG(2,{{q}}): {{N}} points, {{N}} lines, {{line_size}} points per line',
    }

    def __init__(self, **kwargs):
        self.config = {
            'q': [None, 'plane order, a prime power'],
            'dump': ['points', 'which triples to list: points or lines'],
        }
        super(PlaneCommand, self).__init__(**kwargs)

    def run(self, context):
        plane = plane_of_order(self.get_config('q'))
        rows = plane.dump(self.get_config('dump'))
        payload = {
            'q': plane.q,
            'N': plane.N,
            'line_size': plane.line_size,
            'kind': self.get_config('dump'),
            'rows': [list(row) for row in rows],
        }
        return Report(payload, columns=('idx', 'x', 'y', 'z'), rows=rows)


def _set_for(plane, construction, set_file, context):
    if set_file:
        q, payload = read_set_file(set_file)
        return point_set_from_payload(plane, payload), {'set_file': set_file}
    if not construction:
        raise ParameterError('give --construction or --set-file')
    spec = parse_construction(construction)
    seed = context['seed'] if context['seed_given'] else None
    return build_construction(plane, spec, seed=seed)


def spectrum_payload(spectrum):
    identities = verify_counting_identities(spectrum)
    bounds = bounds_report(spectrum.q, spectrum.set_size)
    payload = spectrum.as_dict()
    payload['checks'] = identities.as_dict()
    payload['bounds'] = dict(bounds.as_dict(), cor_ceiling=cor_ceiling(spectrum.q), cor_ok=meets_cor_bound(spectrum))
    return payload, identities.passed and meets_cor_bound(spectrum)


class SpectrumCommand(Command):
    name = 'spectrum'
    help = 'secant spectrum of a point set, with the counting identities and bounds'
    option_types = {'q': int}
    required = ('q',)
    summary_templates = {
        'format': ('q={q} N={N} |S|={set_size} mode k={mode_k} count={mode_count} '
                   'cor_ceiling={cor_ceiling} checks_passed={passed}'),
        'mustache': ('q={{q}} N={{N}} |S|={{set_size}} mode k={{mode_k}} count={{mode_count}}\n'
                     '{{#histogram}}L_{{k}} = {{count}}\n{{/histogram}}'),
    }

    def __init__(self, **kwargs):
        self.config = {
            'q': [None, 'plane order'],
            'construction': [None, 'random:density=1/2,seed=S | parabola:a=,b=,g= | family:c=NUM/DEN | ecregion'],
            'set_file': [None, 'read the point set from this JSON set file'],
            'write_set': [None, 'also write the point set to this JSON set file'],
        }
        super(SpectrumCommand, self).__init__(**kwargs)

    def run(self, context):
        plane = plane_of_order(self.get_config('q'))
        point_set, metadata = _set_for(plane, self.get_config('construction'), self.get_config('set_file'), context)
        if self.get_config('write_set'):
            write_set_file(self.get_config('write_set'), point_set)
        spectrum = compute_spectrum(plane, point_set, threads=context['threads'])
        payload, passed = spectrum_payload(spectrum)
        payload['metadata'] = metadata
        payload['cor_ceiling'] = cor_ceiling(plane.q)
        payload['passed'] = passed
        rows = [(k, int(count)) for k, count in enumerate(spectrum.histogram)]
        return Report(payload, columns=('k', 'count'), rows=rows, passed=passed)


class SweepCommand(Command):
    name = 'sweep'
    help = 'mode frequency of a construction over several orders and seeds'
    default_format = 'csv'
    summary_templates = {
        'format': '{rows_count} rows, {failed} failed checks, {errors} errors',
        'mustache': '{{rows_count}} rows, {{failed}} failed checks, {{errors}} errors',
    }

    def __init__(self, **kwargs):
        self.config = {
            'primes': ['101,211,307,401,499', 'comma separated plane orders'],
            'construction': ['random:density=1/2', 'construction applied at every order'],
            'seeds': [10, 'number of seeds per order, counting up from --seed'],
        }
        super(SweepCommand, self).__init__(**kwargs)

    def run(self, context):
        try:
            primes = [int(value) for value in self.get_config('primes').split(',') if value.strip()]
        except ValueError:
            raise ParameterError('--primes must be a comma separated list of integers')
        seeds = range(context['seed'], context['seed'] + int(self.get_config('seeds')))
        rows = run_sweep(primes, self.get_config('construction'), seeds, threads=context['threads'])
        failed = sum(1 for row in rows if not row.error and not row.passed)
        errors = sum(1 for row in rows if row.error)
        payload = {
            'schema': SWEEP_SCHEMA,
            'rows': [row.as_dict() for row in rows],
            'rows_count': len(rows),
            'failed': failed,
            'errors': errors,
        }
        exit_code = EXIT_CHECK_FAILED if failed else (EXIT_USAGE if errors else EXIT_OK)
        return Report(payload, columns=SWEEP_COLUMNS, rows=[row.as_dict() for row in rows], schema=SWEEP_SCHEMA,
                      passed=not failed, exit_code=exit_code)


def _search_report(result):
    ceiling = cor_ceiling(result.q)
    payload = dict(result.as_dict(), cor_ceiling=ceiling)
    passed = result.best_mode_count >= ceiling
    return Report(payload, columns=('q', 'method', 'best_mode_count', 'cor_ceiling', 'witness_size',
                                    'subsets_examined'), rows=[payload], passed=passed)


_SEARCH_TEMPLATES = {
    'format': '{method} q={q}: min mode frequency {best_mode_count} (ceiling {cor_ceiling}), witness {witness}',
    'mustache': '{{method}} q={{q}}: min mode frequency {{best_mode_count}} (ceiling {{cor_ceiling}})',
}


class ExhaustiveCommand(Command):
    name = 'exhaustive'
    help = 'exact min-max mode frequency over all subsets (q <= 4)'
    option_types = {'q': int}
    required = ('q',)
    summary_templates = _SEARCH_TEMPLATES

    def __init__(self, **kwargs):
        self.config = {
            'q': [None, 'plane order, at most 4'],
        }
        super(ExhaustiveCommand, self).__init__(**kwargs)

    def run(self, context):
        return _search_report(exhaustive_minmax(plane_of_order(self.get_config('q')), threads=context['threads']))


class SearchCommand(Command):
    name = 'search'
    help = 'local search for sets with a small mode frequency'
    option_types = {'q': int}
    required = ('q',)
    summary_templates = _SEARCH_TEMPLATES

    def __init__(self, **kwargs):
        self.config = {
            'q': [None, 'plane order'],
            'iters': [200, 'flips per restart'],
            'restarts': [4, 'number of random starts'],
        }
        super(SearchCommand, self).__init__(**kwargs)

    def run(self, context):
        plane = plane_of_order(self.get_config('q'))
        return _search_report(local_search(plane, iters=self.get_config('iters'), seed=context['seed'],
                                           restarts=self.get_config('restarts')))


class CharwalkCommand(Command):
    name = 'charwalk'
    help = 'Legendre prefix-sum walk, its level statistics or a window-sum profile'
    option_types = {'p': int, 'phi': int}
    required = ('p',)
    default_format = 'csv'
    summary_templates = {
        'format': 'p={p} a={a}: range {range}, zeros {zero_count}, busiest level {max_level} x{max_level_count}',
        'mustache': 'p={{p}} a={{a}}: range {{range}}, zeros {{zero_count}}, busiest level {{max_level}}',
    }

    def __init__(self, **kwargs):
        self.config = {
            'p': [None, 'odd prime'],
            'a': [0, 'start of the walk'],
            'levels': [False, 'emit level statistics (JSON) instead of the walk'],
            'phi': [None, 'emit the window sums Phi(u, A) for this window length A'],
        }
        super(CharwalkCommand, self).__init__(**kwargs)

    def run(self, context):
        p = self.get_config('p')
        if self.get_config('phi') is not None:
            profile = phi_profile(p, self.get_config('phi'))
            rows = [(u, int(value)) for u, value in enumerate(profile.values)]
            payload = dict(profile.stats.as_dict(), a=profile.a, phi=[row[1] for row in rows],
                           class_frequencies=[{'size': size, 'lines': count}
                                              for size, count in profile.class_frequencies.items()])
            return Report(payload, columns=('u', 'phi'), rows=rows)
        walk = psi_walk(p, self.get_config('a'))
        stats = level_stats(walk)
        payload = dict(stats.as_dict(), a=walk.a, psi=[int(v) for v in walk.values])
        if self.get_config('levels'):
            return Report(payload, columns=('level', 'count'), rows=sorted(stats.counts.items()))
        return Report(payload, columns=('t', 'psi'), rows=[(t, int(v)) for t, v in enumerate(walk.values)])

    @property
    def preferred_format(self):
        return 'json' if self.get_config('levels') else None


class ProjectionCommand(Command):
    name = 'projection'
    help = 'projection function of the region under a parabola, and its laws'
    option_types = {'p': int, 'd': int}
    required = ('p',)
    default_format = 'csv'
    summary_templates = {
        'format': 'p={p} d={d}: range {range} in [{range_low}, {range_high}], laws passed={passed}',
        'mustache': 'p={{p}} d={{d}}: range {{range}}, laws passed={{passed}}',
    }

    def __init__(self, **kwargs):
        self.config = {
            'p': [None, 'prime p > 3'],
            'alpha': ['1/4', 'coefficient of x^2 (a rational, reduced mod p)'],
            'beta': ['1', 'coefficient of x'],
            'gamma': ['1', 'constant term'],
            'd': [1, 'slope of the projection direction'],
            'report': [None, 'also write the law report as JSON to this path'],
            'range_only': [False, 'check only the range law for slope d (fast for large p)'],
        }
        super(ProjectionCommand, self).__init__(**kwargs)

    def run(self, context):
        p = self.get_config('p')
        plane = plane_of_order(p)
        params = parabola_params(plane.field, self.get_config('alpha'), self.get_config('beta'),
                                 self.get_config('gamma'))
        if params.alpha == 0:
            raise ParameterError('alpha must be nonzero')
        profile = projection_profile(plane, params, self.get_config('d'))
        increments, law, displayed = increment_laws(plane.field, params, profile.pr, profile.d)
        rows = [(b, int(profile.pr[b]), int(increments[b]), int(law[b]), int(displayed[b])) for b in range(p)]

        if self.get_config('range_only'):
            laws = {'L5': check_range_law(plane, params, profile.d).as_dict()}
            passed = laws['L5']['passed']
        else:
            report = verify_projection_laws(plane, params, threads=context['threads'])
            laws = report.as_dict()
            passed = report.passed
        low, high = (np.sqrt(p) / (2 * np.pi), np.sqrt(p) * np.log(p))
        payload = {
            'p': p,
            'd': profile.d,
            'params': {'alpha': params.alpha, 'beta': params.beta, 'gamma': params.gamma},
            'pr': [int(v) for v in profile.pr],
            'range': profile.range,
            'range_low': float(low),
            'range_high': float(high),
            'laws': laws,
            'passed': passed,
        }
        if self.get_config('report'):
            with io.open(self.get_config('report'), 'wb') as handle:
                handle.write(json_bytes(laws))
        return Report(payload, columns=('b', 'pr', 'increment', 'law', 'displayed'), rows=rows, passed=passed)


class EcCountCommand(Command):
    name = 'count'
    help = 'point count and trace of Y^2 = X^3 + aX + b'
    option_types = {'p': int, 'a': int, 'b': int}
    required = ('p', 'a', 'b')
    summary_templates = {
        'format': 'p={p} a={a} b={b}: {count} points, trace {trace}, hasse={hasse}',
        'mustache': 'p={{p}} a={{a}} b={{b}}: {{count}} points, trace {{trace}}',
    }

    def __init__(self, **kwargs):
        self.config = {
            'p': [None, 'prime p > 3'],
            'a': [None, 'coefficient of X'],
            'b': [None, 'constant term'],
        }
        super(EcCountCommand, self).__init__(**kwargs)

    def run(self, context):
        p = self.get_config('p')
        curve = curve_count(p, self.get_config('a'), self.get_config('b'))
        payload = curve.as_dict()
        passed = hasse_holds(curve)
        if p <= BRUTEFORCE_LIMIT:
            payload['bruteforce_count'] = curve_count_bruteforce(p, curve.a, curve.b)
            passed = passed and payload['bruteforce_count'] == curve.count
        payload['passed'] = passed
        return Report(payload, columns=('p', 'a', 'b', 'count', 'trace'), rows=[payload], passed=passed)


class EcScanCommand(Command):
    name = 'scan'
    help = 'spectrum of the square region and the line-curve relation on every line'
    option_types = {'p': int}
    required = ('p',)
    summary_templates = {
        'format': ('p={p}: |S|={set_size} mode count {mode_count}, {relations_checked} lines checked, '
                   '{relation_violations} violations, {skipped_lines} skipped'),
        'mustache': 'p={{p}}: mode count {{mode_count}}, {{relation_violations}} violations',
    }

    def __init__(self, **kwargs):
        self.config = {
            'p': [None, 'prime p > 3'],
        }
        super(EcScanCommand, self).__init__(**kwargs)

    def run(self, context):
        report = ec_spectrum_scan(plane_of_order(self.get_config('p')), threads=context['threads'])
        payload = report.as_dict()
        rows = [(entry['k'], entry['count']) for entry in payload['histogram']]
        return Report(payload, columns=('k', 'count'), rows=rows, passed=report.passed)


class EcTracesCommand(Command):
    name = 'traces'
    help = 'how many nonsingular curves over F_p have each trace'
    option_types = {'p': int}
    required = ('p',)
    summary_templates = {
        'format': 'p={p}: {curves} nonsingular curves, traces {traces}',
        'mustache': 'p={{p}}: {{curves}} nonsingular curves',
    }

    def __init__(self, **kwargs):
        self.config = {
            'p': [None, 'prime p > 3'],
        }
        super(EcTracesCommand, self).__init__(**kwargs)

    def run(self, context):
        p = self.get_config('p')
        traces = trace_distribution(p)
        rows = sorted(traces.items())
        passed = all(t * t <= 4 * p for t in traces)
        payload = {
            'p': p,
            'curves': sum(traces.values()),
            'traces': [{'trace': t, 'count': count} for t, count in rows],
            'passed': passed,
        }
        return Report(payload, columns=('trace', 'count'), rows=rows, passed=passed)


class LegitGenCommand(Command):
    name = 'gen'
    help = 'generate a random n-uniform linear hypergraph with n edges'
    option_types = {'n': int, 'probability': float, 'shuffle_seed': int}
    required = ('n',)
    choices = {'mode': ('pairwise', 'sunflower', 'mixed')}
    summary_templates = {
        'format': 'n={n}, {num_vertices} vertices',
        'mustache': 'n={{n}}, {{num_vertices}} vertices',
    }

    def __init__(self, **kwargs):
        self.config = {
            'n': [None, 'number of edges and edge size'],
            'mode': ['pairwise', 'pairwise, sunflower or mixed'],
            'probability': [0.5, 'chance that a pair of edges meets (pairwise and sunflower modes)'],
            'shuffle_seed': [None, 'reorder the edges with this seed'],
        }
        super(LegitGenCommand, self).__init__(**kwargs)

    def run(self, context):
        hypergraph = generate_linear_hypergraph(self.get_config('n'), context['seed'], mode=self.get_config('mode'),
                                                intersection_probability=self.get_config('probability'))
        if self.get_config('shuffle_seed') is not None:
            hypergraph = permute_edges(hypergraph, self.get_config('shuffle_seed'))
        return Report(hypergraph.as_dict())


class LegitColorCommand(Command):
    name = 'color'
    help = 'two-phase legitimate 2-coloring of a hypergraph file'
    option_types = {'shuffle_seed': int}
    required = ('in',)
    summary_templates = {
        'format': 'blue counts {blue_counts}, targets {targets}, legitimate={legitimate}',
        'mustache': 'blue counts {{#blue_counts}}{{.}} {{/blue_counts}}legitimate={{legitimate}}',
    }

    def __init__(self, **kwargs):
        self.config = {
            'in': [None, 'hypergraph JSON file'],
            'shuffle_seed': [None, 'reorder the edges with this seed before coloring'],
            'coloring_out': [None, 'also write the coloring JSON to this path'],
        }
        super(LegitColorCommand, self).__init__(**kwargs)

    def run(self, context):
        hypergraph = read_hypergraph(self.get_config('in'))
        if self.get_config('shuffle_seed') is not None:
            hypergraph = permute_edges(hypergraph, self.get_config('shuffle_seed'))
        coloring = two_phase_coloring(hypergraph)
        legitimate, certificate = verify_legitimate(hypergraph, coloring)
        if self.get_config('coloring_out'):
            write_coloring(self.get_config('coloring_out'), coloring)
        payload = dict(coloring.as_dict(), legitimate=legitimate, pair=certificate['pair'])
        rows = [(d.edge, blue, d.target, d.private, d.captured, d.disjoint, d.recolors)
                for d, blue in zip(coloring.diagnostics, coloring.blue_counts)]
        return Report(payload, columns=('edge', 'blue', 'target', 'private', 'captured', 'disjoint', 'recolors'),
                      rows=rows, passed=legitimate)


class LegitVerifyCommand(Command):
    name = 'verify'
    help = 'check that a coloring gives every edge its own color multiplicities'
    required = ('in', 'coloring')
    summary_templates = {
        'format': 'legitimate={legitimate} pair={pair}',
        'mustache': 'legitimate={{legitimate}}',
    }

    def __init__(self, **kwargs):
        self.config = {
            'in': [None, 'hypergraph JSON file'],
            'coloring': [None, 'coloring JSON file {"colors": [...]}'],
        }
        super(LegitVerifyCommand, self).__init__(**kwargs)

    def run(self, context):
        hypergraph = read_hypergraph(self.get_config('in'))
        legitimate, certificate = verify_legitimate(hypergraph, read_coloring(self.get_config('coloring')))
        payload = dict(certificate, legitimate=legitimate)
        rows = [(i,) + tuple(m) for i, m in enumerate(certificate['multiplicities'], 1)]
        return Report(payload, columns=('edge', 'blue', 'red'), rows=rows, passed=legitimate)


COMMANDS = (PlaneCommand, SpectrumCommand, SweepCommand, ExhaustiveCommand, SearchCommand, CharwalkCommand,
            ProjectionCommand)

GROUPS = (
    ('ec', 'elliptic curves over F_p', (EcCountCommand, EcScanCommand, EcTracesCommand)),
    ('legit', 'legitimate colorings of linear hypergraphs', (LegitGenCommand, LegitColorCommand, LegitVerifyCommand)),
)


def _global_options():
    parent = ArgumentParser(add_help=False)
    parent.add_argument('--seed', type=int, default=argparse.SUPPRESS, help='random seed (default 0)')
    parent.add_argument('--threads', type=int, default=argparse.SUPPRESS, help='worker count (default 1)')
    parent.add_argument('--out', default=argparse.SUPPRESS, help='output path (default stdout)')
    parent.add_argument('--format', choices=('csv', 'json', 'text'), default=argparse.SUPPRESS,
                        help='output format (default depends on the command)')
    parent.add_argument('-v', '--verbose', action='count', default=argparse.SUPPRESS,
                        help='-v for progress, -vv for debug logging on stderr')
    parent.add_argument('--template-adapter', dest='template_adapter', default=argparse.SUPPRESS,
                        help='dotted path of the adapter rendering --format text')
    parent.add_argument('--template', default=argparse.SUPPRESS, help='template file for --format text')
    return parent


def build_parser():
    parent = _global_options()
    parser = ArgumentParser(prog='secants', parents=[parent],
                            description='Secant spectra of point sets in finite projective planes.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for command in COMMANDS:
        sub = subparsers.add_parser(command.name, parents=[parent], help=command.help, description=command.help)
        command.add_arguments(sub)
        sub.set_defaults(command_class=command)
    for group, description, commands in GROUPS:
        group_parser = subparsers.add_parser(group, help=description, description=description)
        group_subparsers = group_parser.add_subparsers(dest='subcommand', metavar='subcommand')
        group_subparsers.required = True
        for command in commands:
            sub = group_subparsers.add_parser(command.name, parents=[parent], help=command.help,
                                              description=command.help)
            command.add_arguments(sub)
            sub.set_defaults(command_class=command)
    return parser


def configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose and verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def emit(command, report, output_format, template_path=None):
    if output_format == 'csv':
        if report.columns is None:
            raise ParameterError('%s has no csv output' % command.name)
        return csv_bytes(report.columns, report.rows, schema=report.schema)
    if output_format == 'text':
        template = None
        if template_path:
            with io.open(template_path, 'r', encoding='utf-8') as handle:
                template = handle.read()
        return text_bytes(command.render_summary(report.payload, template))
    return json_bytes(report.payload)


def _write(data, path, stdout):
    if path:
        with io.open(path, 'wb') as handle:
            handle.write(data)
        return
    stream = stdout if stdout is not None else getattr(sys.stdout, 'buffer', None)
    if stream is None:
        sys.stdout.write(data.decode('utf-8'))
    else:
        stream.write(data)
        stream.flush()


def main(argv=None, stdout=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    seed_given = hasattr(args, 'seed')
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    configure_logging(args.verbose)

    command_class = args.command_class
    options = {key: value for key, value in vars(args).items()
               if key not in GLOBAL_DEFAULTS and key not in ('command', 'subcommand', 'command_class')}
    context = {'seed': args.seed, 'seed_given': seed_given, 'threads': args.threads}
    try:
        command = command_class(template_adapter=args.template_adapter, **options)
        report = command.run(context)
        preferred = getattr(command, 'preferred_format', None)
        data = emit(command, report, args.format or preferred or command.default_format, args.template)
    except ColoringError as e:
        logger.warning('%s: %s', command_class.name, e)
        sys.stderr.write('secants: check failed: %s\n' % e)
        return EXIT_CHECK_FAILED
    except (SecantsError, ValueError, IOError) as e:
        logger.debug('command failed', exc_info=True)
        sys.stderr.write('secants: error: %s\n' % e)
        return EXIT_USAGE
    _write(data, args.out, stdout)

    if report.exit_code is not None:
        return report.exit_code
    if not report.passed:
        logger.warning('%s: a check failed', command.name)
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
