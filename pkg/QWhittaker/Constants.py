SERVICE_NORMALIZE = 'qwhittaker.managers.normalizer'
SERVICE_SERIALIZER = 'qwhittaker.managers.serializer'
SERVICE_SUITE = 'qwhittaker.suites'
SERVICE_TASK_EXECUTOR = 'qwhittaker.shared.TaskExecutor'

ENV_MAX_RANK = 'QWHIT_MAX_RANK'
DEFAULT_MAX_RANK = 4

DEFAULT_WINDOW = (-1, 3)
DEFAULT_MAX_PART = 3
DEFAULT_DEGREE_BOUND = 4
DEFAULT_Q_VALUE = '1/2'
DEFAULT_K_LIST = (4, 8, 12)
DEFAULT_TRUNCATION = 60
DEFAULT_TOLERANCE = 1e-3

SUITES = (
    'eigen', 'recursion', 'intertwine', 'adjoint', 'pieri', 'branching',
    'cauchy', 'q0', 'q1', 'positivity', 'macdonald', 'degenerate',
)

STATUS_PASS = 'pass'
STATUS_FAIL = 'fail'
STATUS_ERROR = 'error'

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
