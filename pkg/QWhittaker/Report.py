import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import QWhittaker.Constants as Constants

logger = logging.getLogger(__name__)

@dataclass
class Outcome:
    """
        Result of a single identity check: ``residual`` is the difference of both sides.
    """
    passed: bool
    residual: Any = None
    details: Dict[str, Any] = field(default_factory=dict)

@dataclass
class VerificationReport:
    check: str
    params: Dict[str, Any]
    status: str
    residual: Optional[Any] = None
    wallTime: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == Constants.STATUS_PASS

def runCheck(check, params, func):
    """
        Run ``func`` (returning an Outcome or a bool) and wrap it into a report.
        Exceptions become status 'error'.
    """
    start = time.perf_counter()
    try:
        outcome = func()
    except Exception as e:
        logger.exception(e)
        return VerificationReport(check, params, Constants.STATUS_ERROR, None, time.perf_counter() - start,
                                  {'error': '{}: {}'.format(type(e).__name__, e)})
    elapsed = time.perf_counter() - start
    if not isinstance(outcome, Outcome):
        outcome = Outcome(bool(outcome))
    if outcome.passed:
        return VerificationReport(check, params, Constants.STATUS_PASS, None, elapsed, outcome.details)
    logger.warning('Check {} failed for {}'.format(check, params))
    residual = outcome.residual if outcome.residual is not None else 'identity does not hold'
    return VerificationReport(check, params, Constants.STATUS_FAIL, residual, elapsed, outcome.details)

def exitCode(reports):
    if all(report.passed for report in reports):
        return Constants.EXIT_OK
    return Constants.EXIT_FAILURE
