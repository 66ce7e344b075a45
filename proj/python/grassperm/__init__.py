from ._grassperm import *  # noqa: F401,F403
from ._grassperm import __doc__  # noqa: F401
