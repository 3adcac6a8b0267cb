from kernel.settings.config.setup import env
from kernel.settings.base.settings import QHA

# Development runs keep the thread pool small so failures stay readable.
QHA["WORKERS"] = env.int("QHA_WORKERS", default=2)
