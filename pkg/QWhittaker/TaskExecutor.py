import concurrent.futures
import logging

logger = logging.getLogger(__name__)

class TaskExecutor:
    """
        Shared worker pool. ``map`` keeps the order of its inputs so reports
        come out in grid order whatever the worker count.
    """
    def __init__(self, appContext, workers=1):
        self.appContext = appContext
        self.workers = workers
        self.executor = concurrent.futures.ThreadPoolExecutor(workers) if workers and workers > 1 else None

    def map(self, func, items):
        if self.executor is None:
            return [func(item) for item in items]
        logger.debug('Dispatching {} tasks to {} workers'.format(len(items), self.workers))
        return list(self.executor.map(func, items))

    def shutdown(self):
        if self.executor is not None:
            self.executor.shutdown(wait=True)
