import logging

import QWhittaker.Constants as Constants
import QWhittaker.Suites as Suites
from QWhittaker.ApplicationContext import ApplicationContext
from QWhittaker.Normalizer import NormalizerManager
from QWhittaker.Report import exitCode
from QWhittaker.Serializer import SerializerManager
from QWhittaker.Suite import SuiteManager
from QWhittaker.TaskExecutor import TaskExecutor

logger = logging.getLogger(__name__)

class Application:
    def __init__(self, config):
        self.config = config
        self.context = ApplicationContext(self)
        self.boot()

    def getContext(self):
        return self.context

    def boot(self):
        self.getContext().addSharedService(Constants.SERVICE_NORMALIZE,     NormalizerManager(self.context))
        self.getContext().addSharedService(Constants.SERVICE_SERIALIZER,    SerializerManager(self.context))
        self.getContext().addSharedService(Constants.SERVICE_TASK_EXECUTOR, TaskExecutor(self.context, self.config.workers))
        self.getContext().addSharedService(Constants.SERVICE_SUITE,         SuiteManager(self.context))

        self.getContext().getSharedService(Constants.SERVICE_SUITE).load(Suites)

    def emit(self, data):
        """
            Normalize and serialize ``data`` in the configured output format.
        """
        normalized = self.getContext().getSharedService(Constants.SERVICE_NORMALIZE).normalize(data)
        return self.getContext().getSharedService(Constants.SERVICE_SERIALIZER).serialize(normalized, self.config.format)

    def verify(self):
        suiteManager = self.getContext().getSharedService(Constants.SERVICE_SUITE)
        reports = suiteManager.runAll(self.config.suites())
        failed = [report for report in reports if not report.passed]
        logger.info('{} checks run, {} not passing'.format(len(reports), len(failed)))
        return reports, exitCode(reports)

    def exit(self):
        self.getContext().getSharedService(Constants.SERVICE_TASK_EXECUTOR).shutdown()
        logger.debug('Application closed')
