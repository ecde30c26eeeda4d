#
# Command line interface
#
import argparse
import json
import logging
import sys
from ._accept import CRITERIA, run_acceptance
from ._complex import (
    complement_skeleton_graph,
    independence_complex,
    is_flag,
    is_pseudomanifold,
    is_vertex_decomposable,
)
from ._config import default_coeff
from ._construct import MODES, classify, example_start, random_corpus, start, step
from ._cycles import is_ternary
from ._errors import DomainError, FlagsphereError, InputError, ParseError, ResourceError
from ._families import build_complete, build_cycle, build_gm, build_path, build_r3, crosspolytope_boundary, matching_graph
from ._flip import Partition, build_H, gm_union, refinement_graph, verify_iso_H_P
from ._graph import Graph
from ._homology import homology_report
from ._io import dumps, load, loads, read_text
from ._planarity import is_planar
from ._polynomial import Polynomial
from ._report import SCHEMA_VERSION, Report
from ._util import get_summary
from ._vectors import certify_negative_real_roots, delannoy_poly, vectors

__all__ = ['main', 'build_parser', 'run']

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

FAMILIES = ('gm', 'r3', 'cycle', 'path', 'complete', 'matching', 'crosspolytope', 'union')
CHECKS = ('ternary', 'planar', 'flag', 'sphere', 'cohen_macaulay', 'gorenstein', 'pseudomanifold', 'vertex_decomposable')


def _write(args, text):
    if args.output:
        with open(args.output, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _json(data):
    return json.dumps(data, indent=2) + '\n'


def _require(args, name):
    value = getattr(args, name)
    if value is None:
        raise InputError(f'{args.family} needs --{name}')
    return value


def cmd_gen(args):
    """ Emit a member of a graph family, or its independence complex. """
    family = args.family
    if family == 'gm':
        obj = build_gm(_require(args, 'm'))
    elif family == 'r3':
        obj = build_r3()
    elif family == 'cycle':
        obj = build_cycle(_require(args, 'n'))
    elif family == 'path':
        obj = build_path(_require(args, 'n'))
    elif family == 'complete':
        obj = build_complete(_require(args, 'n'))
    elif family == 'matching':
        obj = matching_graph(_require(args, 'm'))
    elif family == 'crosspolytope':
        obj = crosspolytope_boundary(_require(args, 'm'))
    else:
        obj = gm_union(Partition(_require(args, 'parts')))

    if args.complex and isinstance(obj, Graph):
        obj = independence_complex(obj)
    _write(args, dumps(obj, args.format))
    return EXIT_OK


def _check_graph(report, g, wanted):
    if 'ternary' in wanted:
        result = is_ternary(g)
        report.add_check('ternary', result.ternary, None if result.witness is None else result.witness.to_dict())
    if 'planar' in wanted:
        result = is_planar(g)
        witness = result.kuratowski.to_dict() if result.kuratowski is not None else {'embedding': result.embedding}
        report.add_check('planar', result.planar, witness)


def _check_complex(report, d, wanted, coeff):
    if 'flag' in wanted:
        report.add_check('flag', is_flag(d))
    if wanted & {'sphere', 'cohen_macaulay', 'gorenstein'}:
        homology = homology_report(d, coeff)
        report.results['betti'] = homology['betti']
        report.results['coeff'] = homology['coeff']
        for name, key in (('sphere', 'homology_sphere'), ('cohen_macaulay', 'cohen_macaulay'), ('gorenstein', 'gorenstein')):
            if name in wanted:
                report.add_check(name, homology[key])
    if 'pseudomanifold' in wanted:
        result = is_pseudomanifold(d)
        report.add_check('pseudomanifold', result.pseudomanifold, result.to_dict())
    if 'vertex_decomposable' in wanted:
        report.add_check('vertex_decomposable', is_vertex_decomposable(d))


def cmd_check(args):
    """ Run structural checks on a graph or complex file. """
    report = Report(args.argv, timing=args.timing)
    text = read_text(args.file)
    report.add_input(args.file, text)
    obj = loads(text)
    wanted = set(CHECKS) if args.all else {c for c in CHECKS if getattr(args, c)}
    if not wanted:
        raise InputError('Select at least one check, or --all')
    coeff = args.coeff or default_coeff()

    if isinstance(obj, Graph):
        with report.timed('graph'):
            _check_graph(report, obj, wanted)
        d = independence_complex(obj)
    else:
        d = obj
        if wanted & {'ternary', 'planar'}:
            try:
                _check_graph(report, complement_skeleton_graph(d), wanted)
            except DomainError:
                for name in wanted & {'ternary', 'planar'}:
                    report.add_check(name, None)
    with report.timed('complex'):
        _check_complex(report, d, wanted, coeff)

    _write(args, report.to_json())
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_vectors(args):
    """ f-, h- and gamma-vectors, with the Delannoy comparison and the real-root certificate. """
    if args.gm is not None:
        d = independence_complex(build_gm(args.gm))
    elif args.file is not None:
        obj = load(args.file)
        d = independence_complex(obj) if isinstance(obj, Graph) else obj
    else:
        raise InputError('vectors needs --gm or --file')

    fhg = vectors(d)
    h = Polynomial(fhg.h)
    data = {'schema_version': SCHEMA_VERSION, **fhg.to_dict()}
    if args.delannoy:
        row = delannoy_poly(len(fhg.h) - 1) if fhg.h else Polynomial()
        data['delannoy'] = list(row.coefficients)
        data['delannoy_match'] = h == row
    else:
        data['delannoy_match'] = None
    certificate = certify_negative_real_roots(h, float_check=False) if not h.is_zero() and h.leading_coefficient > 0 else None
    data['real_rooted'] = None if certificate is None else certificate.certified
    if args.roots and certificate is not None:
        data['certificate'] = certificate.to_dict()

    _write(args, _json(data))
    return EXIT_OK


def cmd_flip(args):
    """ Partition refinement graph, subdivision graph and their matching. """
    p_graph = refinement_graph(args.n)
    h_graph = build_H(args.n, exhaustive=args.exhaustive, workers=args.workers)
    result = verify_iso_H_P(args.n, p_graph=p_graph, h_graph=h_graph)

    if args.emit == 'dot':
        lines = [f'// n={args.n} isomorphic={str(bool(result)).lower()}']
        lines.extend(f'// {lam} -> {graph}' for lam, graph in result.matching.items())
        text = '\n'.join(lines) + '\n' + p_graph.to_dot() + h_graph.to_dot()
    else:
        text = _json({
            'schema_version': SCHEMA_VERSION,
            'P': p_graph.to_dict(),
            'H': h_graph.to_dict(),
            'result': result.to_dict(),
        })
    _write(args, text)
    return EXIT_OK if result else EXIT_FAILED


def _script(text, default_mode, coeff):
    """ Execute a construction script, yielding one report per ``classify`` line. """
    state = None
    mode = default_mode
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        command, *rest = line.split()
        try:
            if command == 'start':
                state = start([int(m) for m in rest])
            elif command == 'example':
                state = example_start()
            elif command == 'mode':
                if len(rest) != 1 or rest[0] not in MODES:
                    raise ParseError(f'Expected "mode origin|component", got "{line}"', lineno)
                mode = rest[0]
            elif command in ('step', 'classify') and state is None:
                raise ParseError(f'"{command}" before "start"', lineno)
            elif command == 'step':
                if len(rest) not in (2, 3):
                    raise ParseError(f'Expected "step <label> <label> [new label]", got "{line}"', lineno)
                state = step(state, rest[0], rest[1], fresh=rest[2] if len(rest) == 3 else None, mode=mode)
            elif command == 'classify':
                yield classify(state, coeff)
            else:
                raise ParseError(f'Unknown command "{command}"', lineno)
        except ValueError as err:
            if isinstance(err, ParseError):
                raise
            raise ParseError(str(err), lineno) from None


def cmd_construct(args):
    """ Run a construction script, or a randomized corpus of constructions. """
    if args.corpus is not None:
        corpus = random_corpus(args.corpus, seed=args.seed, max_n=args.max_n, max_steps=args.max_steps, mode=args.mode, workers=args.workers)
        contingency = {
            f'w_is_tree={tree}': {f'ternary={t}': int(count) for t, count in row.items()}
            for tree, row in corpus.contingency.to_dict(orient='index').items()
        }
        data = {
            'schema_version': SCHEMA_VERSION,
            'seed': args.seed,
            'runs': corpus.frame.to_dict(orient='records'),
            'contingency': contingency,
            'disagreements': corpus.disagreements,
        }
        _write(args, _json(data))
        strict = [s for s in corpus.disagreements if all(step['mode'] == 'origin' for step in s['steps'])]
        return EXIT_FAILED if strict else EXIT_OK

    if args.script is None:
        raise InputError('construct needs --script or --corpus')
    with open(args.script, encoding='utf-8') as f:
        text = f.read()
    reports = list(_script(text, args.mode, args.coeff))
    _write(args, _json({'schema_version': SCHEMA_VERSION, 'reports': reports}))
    return EXIT_OK


def cmd_accept(args):
    """ Run the acceptance suite; any failing criterion fails the command. """
    results = run_acceptance(args.only, workers=args.workers)
    report = Report(args.argv, timing=args.timing)
    for result in results:
        report.add_check(f'{result.number}', result.passed, result.error)
        report.results[f'{result.number}'] = result.to_dict(timing=args.timing)
    _write(args, report.to_json())
    return EXIT_OK if report.ok else EXIT_FAILED


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {value}')
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog='flagsphere', description='Exact toolkit for flag spheres, independence complexes and their graphs.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='More logging on stderr (-v INFO, -vv DEBUG)')
    sub = parser.add_subparsers(dest='command', required=True)

    def add(name, func):
        p = sub.add_parser(name, help=get_summary(func.__doc__), description=get_summary(func.__doc__))
        p.set_defaults(func=func)
        p.add_argument('-o', '--output', help='Output file; Default stdout')
        return p

    p = add('gen', cmd_gen)
    p.add_argument('family', choices=FAMILIES)
    p.add_argument('--m', type=_positive)
    p.add_argument('--n', type=_positive)
    p.add_argument('--parts', type=_positive, nargs='+')
    p.add_argument('--complex', action='store_true', help='Emit the independence complex')
    p.add_argument('--format', choices=('text', 'json'), default='text')

    p = add('check', cmd_check)
    p.add_argument('--file', required=True)
    for name in CHECKS:
        p.add_argument(f'--{name.replace("_", "-")}', dest=name, action='store_true')
    p.add_argument('--all', action='store_true')
    p.add_argument('--coeff', help='Coefficient field, eg. F2, F3 or Q')
    p.add_argument('--timing', action='store_true')

    p = add('vectors', cmd_vectors)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--gm', type=_positive)
    source.add_argument('--file')
    p.add_argument('--delannoy', action='store_true')
    p.add_argument('--roots', action='store_true', help='Include the Sturm certificate')

    p = add('flip', cmd_flip)
    p.add_argument('--n', type=_positive, required=True)
    p.add_argument('--emit', choices=('dot', 'json'), default='json')
    p.add_argument('--exhaustive', action='store_true')
    p.add_argument('--workers', type=_positive, default=1)

    p = add('construct', cmd_construct)
    p.add_argument('--script')
    p.add_argument('--corpus', type=_positive, help='Number of randomized runs')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--max-n', type=int, default=6)
    p.add_argument('--max-steps', type=_positive, default=4)
    p.add_argument('--mode', choices=MODES + ('mixed',), default='origin')
    p.add_argument('--coeff')
    p.add_argument('--workers', type=_positive, default=1)

    p = add('accept', cmd_accept)
    p.add_argument('--only', type=int, nargs='+', choices=sorted(CRITERIA))
    p.add_argument('--workers', type=_positive, default=1)
    p.add_argument('--timing', action='store_true')

    return parser


def _setup_logging(verbosity):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def run(argv):
    """ Parse ``argv`` and run the command, returning its exit code. """
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = list(argv)
    _setup_logging(args.verbose)
    if args.command == 'construct' and args.mode == 'mixed' and args.corpus is None:
        parser.error('--mode mixed only applies to --corpus')

    try:
        return args.func(args)
    except ResourceError as err:
        log.error('%s', err)
        return EXIT_RESOURCE
    except (InputError, OSError) as err:
        log.error('%s', err)
        return EXIT_USAGE
    except FlagsphereError as err:
        log.error('%s', err)
        return EXIT_FAILED


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    try:
        return run(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE


