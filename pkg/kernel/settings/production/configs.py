from kernel.settings.config.setup import env
from kernel.settings.base.settings import QHA

# Reports of production sweeps go to a dedicated directory when set.
QHA["REPORT_DIR"] = env.str("QHA_REPORT_DIR", default=QHA["REPORT_DIR"])
