from kernel.settings.config.setup import env, BASE_DIR

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = env("SECRET_KEY")

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',

    # Internal
    'core',
    'quantum_harmonic',
]

REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
}

# The experiment runner keeps no state beyond report files.
DATABASES = {}

# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Numerical defaults for the quantum_harmonic app.
# Every value can be overridden from the environment (.env).
QHA = {
    "MAX_PRODUCT_DIM": env.int("QHA_MAX_PRODUCT_DIM", default=256),
    "TAIL_TOLERANCE": env.float("QHA_TAIL_TOLERANCE", default=1e-8),
    "REPORT_DIR": env.str(
        "QHA_REPORT_DIR", default=str(BASE_DIR / "reports")
    ),
    "WORKERS": env.int("QHA_WORKERS", default=4),
    "DIRECTIONS": env.int("QHA_DIRECTIONS", default=8),
    "SCHEMA_VERSION": "1.0",
}

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "quantum_harmonic": {
            "handlers": ["console"],
            "level": env("LOG_LEVEL"),
            "propagate": False,
        },
    },
}
