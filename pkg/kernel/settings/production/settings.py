from kernel.settings.base.settings import *
from kernel.settings.config.setup import env

DEBUG = False

# Production sweeps log progress only; set LOG_LEVEL=DEBUG to trace them.
LOGGING["loggers"]["quantum_harmonic"]["level"] = env.str(
    "LOG_LEVEL", default="INFO"
)
LOGGING["formatters"]["verbose"]["format"] = (
    "{asctime} {levelname} {process:d} {name}: {message}"
)
