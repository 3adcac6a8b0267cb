from .settings import *

try:
    from kernel.settings.development.configs import *
except ImportError:
    pass
