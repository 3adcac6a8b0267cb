from .settings import *

try:
    from kernel.settings.production.configs import *
except ImportError:
    pass
