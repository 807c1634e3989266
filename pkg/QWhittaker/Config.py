import logging
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

import QWhittaker.Constants as Constants
from QWhittaker.Errors import ConfigError

logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv', 'pretty')

def maxRank():
    """
        Rank cap, overridden by the QWHIT_MAX_RANK environment variable.
    """
    raw = os.environ.get(Constants.ENV_MAX_RANK)
    if raw is None:
        return Constants.DEFAULT_MAX_RANK
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError('{} must be an integer, got {!r}'.format(Constants.ENV_MAX_RANK, raw))
    if value < 1:
        raise ConfigError('{} must be positive, got {}'.format(Constants.ENV_MAX_RANK, value))
    return value

def parseWindow(text):
    m = re.fullmatch(r'\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*', text)
    if m is None:
        raise ConfigError('Window must look like a..b, got {!r}'.format(text))
    low, high = int(m.group(1)), int(m.group(2))
    if low > high:
        raise ConfigError('Empty window {}..{}'.format(low, high))
    return low, high

def parseIntegers(text, what):
    try:
        return tuple(int(part) for part in text.split(',') if part.strip())
    except ValueError:
        raise ConfigError('{} must be a comma separated list of integers, got {!r}'.format(what, text))

def parsePoint(text):
    point = parseIntegers(text, 'Point')
    if not point:
        raise ConfigError('Empty point')
    return point

def parseKList(text):
    kList = parseIntegers(text, 'k-list')
    if not kList:
        raise ConfigError('Empty k-list')
    if any(b <= a for a, b in zip(kList, kList[1:])) or kList[0] < 0:
        raise ConfigError('k-list must be increasing and nonnegative, got {}'.format(list(kList)))
    return kList

def parseQ(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError('q must be a rational like 1/2 or 0.5, got {!r}'.format(text))
    if not 0 < value < 1:
        raise ConfigError('q must lie in (0, 1), got {}'.format(value))
    return value

@dataclass
class RunConfig:
    rank: int = 2
    point: Optional[Tuple[int, ...]] = None
    window: Tuple[int, int] = Constants.DEFAULT_WINDOW
    maxPart: int = Constants.DEFAULT_MAX_PART
    degreeBound: int = Constants.DEFAULT_DEGREE_BOUND
    qValue: Fraction = field(default_factory=lambda: Fraction(Constants.DEFAULT_Q_VALUE))
    kList: Tuple[int, ...] = Constants.DEFAULT_K_LIST
    format: str = 'json'
    suite: str = 'all'
    seed: int = 0
    workers: int = 1
    truncation: int = Constants.DEFAULT_TRUNCATION
    verbose: bool = False

    def validate(self):
        cap = maxRank()
        if not 1 <= self.rank <= cap:
            raise ConfigError('Rank {} outside 1..{}'.format(self.rank, cap))
        if self.point is not None and len(self.point) != self.rank:
            raise ConfigError('Point {} is not of rank {}'.format(list(self.point), self.rank))
        if self.window[0] > self.window[1]:
            raise ConfigError('Empty window {}..{}'.format(*self.window))
        if self.maxPart < 0:
            raise ConfigError('--max-part must be nonnegative')
        if not 0 <= self.degreeBound <= 5:
            raise ConfigError('--degree-bound must lie in 0..5, got {}'.format(self.degreeBound))
        if self.format not in FORMATS:
            raise ConfigError('Unknown output format {}'.format(self.format))
        if self.suite != 'all' and self.suite not in Constants.SUITES:
            raise ConfigError('Unknown suite {}; choose one of {} or all'.format(self.suite, ', '.join(Constants.SUITES)))
        if self.workers < 1:
            raise ConfigError('--workers must be at least 1')
        if self.truncation < 1:
            raise ConfigError('--truncation must be positive')
        return self

    def suites(self):
        return list(Constants.SUITES) if self.suite == 'all' else [self.suite]

    @classmethod
    def fromArguments(cls, args):
        """
            Build a validated config from an argparse namespace; absent options keep their defaults.
        """
        values = {}
        for name in ('rank', 'maxPart', 'degreeBound', 'format', 'seed', 'workers', 'truncation', 'verbose'):
            value = getattr(args, name, None)
            if value is not None:
                values[name] = value
        if getattr(args, 'point', None):
            values['point'] = parsePoint(args.point)
        if getattr(args, 'window', None):
            values['window'] = parseWindow(args.window)
        if getattr(args, 'qValue', None):
            values['qValue'] = parseQ(args.qValue)
        if getattr(args, 'kList', None):
            values['kList'] = parseKList(args.kList)
        suite = getattr(args, 'target', None) or getattr(args, 'suite', None)
        if suite:
            values['suite'] = suite
        if 'rank' not in values and 'point' in values:
            values['rank'] = len(values['point'])
        config = cls(**values).validate()
        logger.debug('Run configuration {}'.format(config))
        return config
