from kernel.settings.base.settings import *
from kernel.settings.config.setup import env

DEBUG = True

LOGGING["loggers"]["quantum_harmonic"]["level"] = env.str(
    "LOG_LEVEL", default="DEBUG"
)
