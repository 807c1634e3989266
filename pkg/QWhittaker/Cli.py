"""
    qwhittaker command line.

        qwhittaker whittaker eval -n 2 -p 0,1
        qwhittaker char eval -n 3 -p 0,1,2
        qwhittaker verify eigen -n 3 --window -1..3
        qwhittaker macdonald poly|eigen|degenerate -n 2 -p 0,2

    Exit codes: 0 all checks pass, 1 a check failed or errored, 2 usage error.
"""
import argparse
import logging
import sys

import QWhittaker.Constants as Constants
from QWhittaker.Application import Application
from QWhittaker.Characters import charGZ
from QWhittaker.Config import RunConfig
from QWhittaker.Degeneration import todaDegenerationCheck
from QWhittaker.Errors import QWhittakerError
from QWhittaker.Macdonald import checkTopRow, macdonaldEigencheck, macdonaldPoly
from QWhittaker.QCombinatorics import isDominant, windowPoints
from QWhittaker.Report import exitCode, runCheck
from QWhittaker.Suites import samplePoint
from QWhittaker.Whittaker import psiDirect, psiTilde

logger = logging.getLogger(__name__)

# options whose values may start with a minus sign
_VALUE_OPTIONS = ('-p', '--point', '--window')

def _joinNegativeValues(argv):
    out = []
    index = 0
    while index < len(argv):
        arg = argv[index]
        if arg in _VALUE_OPTIONS and index + 1 < len(argv) and argv[index + 1].startswith('-'):
            out.append('{}={}'.format(arg, argv[index + 1]) if arg.startswith('--') else arg + argv[index + 1])
            index += 2
            continue
        out.append(arg)
        index += 1
    return out

def _commonOptions():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('-n', '--rank', type=int)
    parser.add_argument('-p', '--point', help='lattice point or top row, e.g. 0,1,2')
    parser.add_argument('--window', help='per-coordinate range a..b, default -1..3')
    parser.add_argument('--max-part', dest='maxPart', type=int)
    parser.add_argument('--degree-bound', dest='degreeBound', type=int)
    parser.add_argument('-q', '--q-value', dest='qValue', help='numeric q in (0, 1), e.g. 1/2')
    parser.add_argument('-k', '--k-list', dest='kList', help='increasing k values, e.g. 4,8,12')
    parser.add_argument('--format', choices=('json', 'csv', 'pretty'))
    parser.add_argument('--suite')
    parser.add_argument('--seed', type=int)
    parser.add_argument('--workers', type=int)
    parser.add_argument('--truncation', type=int, help='factors kept in infinite products')
    parser.add_argument('-v', '--verbose', action='store_true', default=None)
    return parser

def buildParser():
    common = _commonOptions()
    parser = argparse.ArgumentParser(prog='qwhittaker', description='Exact q-deformed gl(n) Whittaker functions and their checks.')
    commands = parser.add_subparsers(dest='command', required=True)

    whittaker = commands.add_parser('whittaker', parents=[common], help='evaluate Psi and Psi-tilde')
    whittaker.add_argument('action', choices=('eval',))
    whittaker.set_defaults(handler=cmdWhittakerEval)

    char = commands.add_parser('char', parents=[common], help='evaluate Gelfand-Zetlin characters')
    char.add_argument('action', choices=('eval',))
    char.set_defaults(handler=cmdCharEval)

    verify = commands.add_parser('verify', parents=[common], help='run verification suites')
    verify.add_argument('target', nargs='?', choices=Constants.SUITES + ('all',))
    verify.set_defaults(handler=cmdVerify)

    macdonald = commands.add_parser('macdonald', parents=[common], help='Macdonald polynomials and operators')
    macdonald.add_argument('action', choices=('poly', 'eigen', 'degenerate'))
    macdonald.set_defaults(handler=cmdMacdonald)
    return parser

def _evaluationPoints(config):
    if config.point is not None:
        return [config.point]
    return windowPoints(config.rank, *config.window)

def cmdWhittakerEval(app, config, args):
    out = []
    for p in _evaluationPoints(config):
        out.append({'p': p, 'psi': psiDirect(p), 'psiTilde': psiTilde(p)})
    print(app.emit(out))
    return Constants.EXIT_OK

def cmdCharEval(app, config, args):
    out = []
    for p in _evaluationPoints(config):
        out.append({'p': p, 'character': charGZ(p)})
    print(app.emit(out))
    return Constants.EXIT_OK

def cmdVerify(app, config, args):
    reports, code = app.verify()
    print(app.emit(reports))
    return code

def _macdonaldRows(config):
    if config.point is not None:
        return [checkTopRow(config.point)]
    return [p for p in windowPoints(config.rank, 0, config.maxPart) if isDominant(p) and sum(p) <= config.degreeBound]

def cmdMacdonald(app, config, args):
    if args.action == 'poly':
        print(app.emit([{'lambda': row, 'poly': macdonaldPoly(row)} for row in _macdonaldRows(config)]))
        return Constants.EXIT_OK
    reports = []
    if args.action == 'eigen':
        for row in _macdonaldRows(config):
            for r in range(1, config.rank + 1):
                reports.append(runCheck('macdonald.Eigen', {'topRow': list(row), 'r': r},
                                        lambda row=row, r=r: macdonaldEigencheck(row, r)))
    else:
        point = samplePoint(config.rank)
        for r in range(1, config.rank + 1):
            reports.append(runCheck('degenerate.Toda', {'r': r, 'n': config.rank, 'x': list(point)},
                                    lambda r=r: todaDegenerationCheck(r, config.rank, config.qValue, config.kList, point)))
    print(app.emit(reports))
    return exitCode(reports)

def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = buildParser()
    try:
        args = parser.parse_args(_joinNegativeValues(argv))
    except SystemExit as e:
        return Constants.EXIT_USAGE if e.code else Constants.EXIT_OK

    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(asctime)s %(name)s %(levelname)s %(message)s')
    try:
        config = RunConfig.fromArguments(args)
    except QWhittakerError as e:
        logger.error(e)
        return Constants.EXIT_USAGE

    app = Application(config)
    try:
        return args.handler(app, config, args)
    except QWhittakerError as e:
        logger.error(e)
        return Constants.EXIT_USAGE
    finally:
        app.exit()
