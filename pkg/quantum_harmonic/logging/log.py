import logging

# Handlers and levels come from the LOGGING dict in kernel.settings.
# Library use without Django configured falls back to the root config.
logger = logging.getLogger("quantum_harmonic")


def get_logger(name: str) -> logging.Logger:
    """Child logger under the package namespace (``quantum_harmonic.x``)."""
    if name.startswith("quantum_harmonic"):
        return logging.getLogger(name)
    return logger.getChild(name)
