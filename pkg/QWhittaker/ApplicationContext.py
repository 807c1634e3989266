from QWhittaker.Errors import InternalError

class ApplicationContext:
    """
        Shared services of one run, keyed by the names in Constants,
        together with the run configuration they serve.
    """
    def __init__(self, app):
        self.app = app
        self._sharedServices = {}

    @property
    def config(self):
        return self.app.config

    def addSharedService(self, name, service):
        if name in self._sharedServices:
            raise InternalError('Service {} is already registered'.format(name))
        self._sharedServices[name] = service

    def getSharedService(self, name):
        if name not in self._sharedServices:
            raise InternalError('Service {} was not booted'.format(name))
        return self._sharedServices[name]
