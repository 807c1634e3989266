import inspect

def _packageRoot(module):
    return module.__name__.split('.')[0]

def fetchClasses(module, filter=None):
    """
        Classes defined in ``module`` or in any module of the same package it
        imports, in discovery order. Modules outside the package are not visited.
    """
    root = _packageRoot(module)
    classes = []
    visited = set()

    def explore(current):
        if current.__name__ in visited:
            return
        visited.add(current.__name__)
        for name, obj in inspect.getmembers(current):
            if inspect.isclass(obj):
                if obj in classes or _packageRoot(inspect.getmodule(obj) or current) != root:
                    continue
                if filter is None or filter(obj):
                    classes.append(obj)
            elif inspect.ismodule(obj) and _packageRoot(obj) == root:
                explore(obj)

    explore(module)
    return classes
