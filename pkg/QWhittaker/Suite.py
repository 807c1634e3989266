import logging
import re
from dataclasses import dataclass
from typing import Any, Callable, Dict

import QWhittaker.Constants as Constants
from QWhittaker.Errors import ConfigError
from QWhittaker.ModuleExplorer import fetchClasses
from QWhittaker.Report import runCheck

logger = logging.getLogger(__name__)

@dataclass
class Case:
    """
        One point of a check grid: ``run`` returns an Outcome or a bool.
    """
    params: Dict[str, Any]
    run: Callable

def getSuites(suiteModule):
    return fetchClasses(suiteModule, lambda obj: re.match(r'^\w+Suite$', obj.__name__))

class SuiteManager:
    """
        Serves every ``check<Name>`` method of every ``<Name>Suite`` class as
        ``qwhittaker.suites.<name>.<Name>``; a check method yields Cases.
    """
    def __init__(self, app):
        self._app = app
        self._map = {}
        self._checks = {}

    def getAppContext(self):
        return self._app

    def generateCheckName(self, suiteName, checkName):
        return '{}.{}.{}'.format(Constants.SERVICE_SUITE, suiteName, checkName)

    def getMap(self):
        return self._map

    def load(self, module):
        for suite in getSuites(module):
            self.add(suite())

    def add(self, suite):
        m = re.search(r'(?P<name>\w+)Suite$', suite.__class__.__name__)
        if m is not None:
            suiteName = m.group('name').lower()
        else:
            logger.warning('Invalid suite name for {}'.format(suite.__class__.__name__))
            return

        logger.info('Found suite {}'.format(suiteName))

        self._map[suiteName] = {}

        methods = [getattr(suite, method) for method in dir(suite) if callable(getattr(suite, method))]

        for method in methods:
            m = re.search(r'^check(?P<name>\w+)$', method.__name__)
            if m is None:
                continue
            checkName = self.generateCheckName(suiteName, m.group('name'))
            logger.info('Serving check "{}" of suite "{}" as "{}"'.format(m.group('name'), suiteName, checkName))
            self._map[suiteName][m.group('name')] = checkName
            self._checks[checkName] = method

    def run(self, suiteName, config=None):
        """
            Run every check of a suite over its grid; reports keep grid order.
            Without an explicit config the application's run configuration is used.
        """
        config = self.getAppContext().config if config is None else config
        if suiteName not in self._map:
            raise ConfigError('Unknown suite {}'.format(suiteName))
        executor = self.getAppContext().getSharedService(Constants.SERVICE_TASK_EXECUTOR)
        reports = []
        for shortName, checkName in sorted(self._map[suiteName].items()):
            cases = list(self._checks[checkName](config))
            label = '{}.{}'.format(suiteName, shortName)
            logger.info('Running {} over {} cases'.format(label, len(cases)))
            reports.extend(executor.map(lambda case: runCheck(label, case.params, case.run), cases))
        return reports

    def runAll(self, suiteNames, config=None):
        reports = []
        for suiteName in suiteNames:
            reports.extend(self.run(suiteName, config))
        return reports
