"""Access to the ``QHA`` settings block with library-safe fallbacks."""

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    "MAX_PRODUCT_DIM": 256,
    "TAIL_TOLERANCE": 1e-8,
    "REPORT_DIR": "reports",
    "WORKERS": 4,
    "DIRECTIONS": 8,
    "SCHEMA_VERSION": "1.0",
}


def qha_setting(name: str):
    """Return ``settings.QHA[name]``, or the built-in default.

    The numerical modules are importable without a configured Django
    project; in that case every lookup resolves to ``DEFAULTS``.
    """
    try:
        configured = getattr(settings, "QHA", {})
    except ImproperlyConfigured:
        configured = {}
    if name in configured:
        return configured[name]
    return DEFAULTS[name]
