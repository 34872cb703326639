#!/usr/bin/env python3
"""
Command line entry point: ``biregkit <command> --input ideal.json ...``.

Every command prints one JSON report on stdout. Errors print
``{"error": ...}`` and exit with 2 (parse), 3 (math) or 4 (consensus).
"""

import argparse
import dataclasses
import json
import sys
import time

from .blowup import (
    PresentationKind,
    ci_reg_from_ideal,
    fourth_threshold,
    generation_report,
    hilbert_burch_analysis,
    linearity_threshold_bigin,
    power_reg_table,
    presentation,
)
from .corpus import CorpusSpec, Flavor, generate, write_corpus
from .documents import IdealDocument, Report
from .errors import BiregkitError, MathError
from .gin import DEFAULT_TRIALS, bigin
from .parser import format_monomial
from .regularity import generic_forms_d_sequence, reg_via_betti, reg_via_bigin, reg_via_s_values
from .resolve import koszul_betti, taylor_betti
from .groebner import MonomialIdeal
from .ring import Field, RingSignature
from .utils import get_data_path, limit_count
from .veronese import veronese_bound
from .verify import run_suite, summary_frame


def _load(args):
    document = IdealDocument.load(args.input)
    if getattr(args, 'field', None):
        ring = RingSignature(document.ring.n, document.ring.m, Field.parse(args.field))
        document = dataclasses.replace(document, ring=ring)
    return document


def _betti_table(ideal, method='koszul', box=None):
    if method == 'taylor':
        if not ideal.is_monomial:
            raise MathError("The Taylor route needs a monomial ideal")
        return taylor_betti(MonomialIdeal.of(ideal))
    return koszul_betti(ideal, box)


def cmd_bigin(args, document):
    ideal = document.ideal()
    result = bigin(ideal, trials=args.trials, seed=args.seed)
    ring = ideal.ring
    return {
        'generators': [format_monomial(ring, g) for g in result.ideal.gens],
        'agreed': result.agreed,
        'trials': [{'seed': seed, 'generators': [format_monomial(ring, g) for g in trial.gens]}
                   for seed, trial in result.trials],
    }, result.agreed


def cmd_betti(args, document):
    table = _betti_table(document.ideal(), args.method, args.box)
    return table.to_json(), table.complete


def cmd_reg(args, document):
    ideal = document.ideal()
    if args.via == 'svalues':
        report = reg_via_s_values(ideal, args.seed)
    elif args.via == 'bigin':
        report = reg_via_bigin(ideal, trials=args.trials, seed=args.seed)
    else:
        report = reg_via_betti(ideal, args.box)
    complete = all(isinstance(v, int) for v in (report.reg_x, report.reg_y) if v is not None)
    return report.to_json(), complete


def cmd_dseq(args, document):
    ideal = document.ideal()
    verdict = generic_forms_d_sequence(ideal, args.direction, seed=args.seed, trials=args.trials)
    return {'direction': args.direction, 'generic_forms_d_sequence': verdict}, True


def cmd_rees(args, document):
    pres = presentation(document.ideal(), args.kind)
    return pres.to_json(), True


def cmd_powers(args, document):
    base = document.ideal()
    table = power_reg_table(base, args.jmax, kind=args.kind, route=args.route,
                            seed=args.seed, trials=args.trials, progress=True)
    threshold = linearity_threshold_bigin(base, kind=args.kind, trials=args.trials, seed=args.seed)
    return {'table': table.to_json(), 'thresholds': threshold.to_json()}, True


def cmd_thresholds(args, document):
    base = document.ideal()
    threshold = linearity_threshold_bigin(base, kind=args.kind, trials=args.trials, seed=args.seed)
    pres = presentation(base, args.kind)
    fourth = fourth_threshold(pres.ideal, seed=args.seed) if not pres.ideal.is_zero else None
    results = {
        **threshold.to_json(),
        'j0_fourth': fourth.value if fourth else pres.ring.m,
        'fourth': fourth.to_json() if fourth else None,
        'generation': generation_report(base, seed=args.seed).to_json(),
    }
    if len(base.gens) >= 2:
        results['hilbert_burch'] = hilbert_burch_analysis(
            base, assume_linear_type=args.assume_linear_type).to_json()
    try:
        ci = ci_reg_from_ideal(pres.ideal)
        results['ci'] = {'value': ci.value, 'onset': ci.onset}
    except MathError as e:
        results['ci'] = {'not_applicable': e.message}
    complete = fourth.w.complete if fourth else True
    return results, complete


def cmd_veronese(args, document):
    table = _betti_table(document.ideal(), args.method)
    return veronese_bound(table, args.s, args.t).to_json(), table.complete


def cmd_corpus(args):
    spec = CorpusSpec(seed=args.seed, n=args.n, m=args.m, flavor=Flavor(args.flavor),
                      count=limit_count(args.count), max_degree=tuple(args.max_degree),
                      generators=tuple(args.generators), degree=args.degree)
    out = args.out or get_data_path(f"corpus/{args.flavor}")
    paths = write_corpus(generate(spec), out)
    return {'written': [str(p) for p in paths], 'directory': str(out)}, True


def build_parser():
    parser = argparse.ArgumentParser(prog='biregkit', description='Bigraded regularity toolkit')
    commands = parser.add_subparsers(dest='command', required=True)

    def with_input(name, help_text):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument('--input', required=True, help='Ideal document (JSON)')
        sub.add_argument('--field', default=None, help='Override the field: Q or Fp:<p>')
        sub.add_argument('--seed', type=int, default=0, help='Seed for randomized steps')
        sub.add_argument('--trials', type=int, default=DEFAULT_TRIALS, help='Trials for generic choices')
        return sub

    with_input('bigin', 'Bigeneric initial ideal')

    sub = with_input('betti', 'Bigraded Betti table of S/J')
    sub.add_argument('--method', choices=['koszul', 'taylor'], default='koszul')
    sub.add_argument('--box', type=int, nargs=2, metavar=('A', 'B'), default=None)

    sub = with_input('reg', 'reg_x and reg_y of S/J')
    sub.add_argument('--via', choices=['svalues', 'betti', 'bigin'], default='svalues')
    sub.add_argument('--box', type=int, nargs=2, metavar=('A', 'B'), default=None)

    sub = with_input('dseq', 'Do generic linear forms give a d-sequence')
    sub.add_argument('--direction', choices=['x', 'y'], default='x')

    sub = with_input('rees', 'Presentation of the Rees or symmetric algebra')
    sub.add_argument('--kind', choices=[k.value for k in PresentationKind], default='rees')

    sub = with_input('powers', 'reg(I^j) for j = 1..jmax')
    sub.add_argument('--jmax', type=int, default=4)
    sub.add_argument('--kind', choices=[k.value for k in PresentationKind], default='rees')
    sub.add_argument('--route', choices=['direct', 'strand', 'bigin'], default='direct')

    sub = with_input('thresholds', 'Onsets of linear regularity of powers')
    sub.add_argument('--kind', choices=[k.value for k in PresentationKind], default='rees')
    sub.add_argument('--assume-linear-type', action='store_true',
                     help='Skip comparing the Rees and symmetric presentations')

    sub = with_input('veronese', 'Regularity bounds of the bigraded Veronese algebra')
    sub.add_argument('--s', type=int, required=True)
    sub.add_argument('--t', type=int, required=True)
    sub.add_argument('--method', choices=['koszul', 'taylor'], default='koszul')

    sub = commands.add_parser('corpus', help='Write a random corpus of ideal documents')
    sub.add_argument('--flavor', choices=[f.value for f in Flavor], required=True)
    sub.add_argument('--seed', type=int, required=True)
    sub.add_argument('--count', type=int, default=20)
    sub.add_argument('--n', type=int, default=2)
    sub.add_argument('--m', type=int, default=2)
    sub.add_argument('--max-degree', type=int, nargs=2, default=[2, 2], metavar=('A', 'B'))
    sub.add_argument('--generators', type=int, nargs=2, default=[1, 3], metavar=('LO', 'HI'))
    sub.add_argument('--degree', type=int, default=2, help='Generator degree for equigenerated-x')
    sub.add_argument('--out', default=None, help='Output directory (default under data/)')

    sub = commands.add_parser('verify', help='Run an acceptance battery')
    sub.add_argument('--suite', choices=['paper'], default='paper')
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--out', default=None, help='Also write the summary as CSV')
    return parser


HANDLERS = {
    'bigin': cmd_bigin,
    'betti': cmd_betti,
    'reg': cmd_reg,
    'dseq': cmd_dseq,
    'rees': cmd_rees,
    'powers': cmd_powers,
    'thresholds': cmd_thresholds,
    'veronese': cmd_veronese,
}


def _verify(args):
    results = run_suite(args.suite, seed=args.seed)
    frame = summary_frame(results)
    print(frame.to_string(index=False))
    if args.out:
        frame.to_csv(args.out, index=False)
    passed = sum(r.passed for r in results)
    print(f"\n{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


def main(argv=None):
    args = build_parser().parse_args(argv)
    arguments = {k: v for k, v in vars(args).items() if k != 'command'}
    start = time.time()
    try:
        if args.command == 'verify':
            return _verify(args)
        if args.command == 'corpus':
            results, complete = cmd_corpus(args)
            document = None
        else:
            document = _load(args)
            results, complete = HANDLERS[args.command](args, document)
    except BiregkitError as e:
        print(json.dumps({'error': e.payload()}, indent=2, sort_keys=True, default=str))
        return e.exit_code

    report = Report(args.command, arguments, results, complete=complete,
                    seed=getattr(args, 'seed', None), elapsed=time.time() - start,
                    input=document.to_json() if document else None)
    print(report.dumps())
    return 0


if __name__ == "__main__":
    sys.exit(main())
