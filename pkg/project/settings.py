"""
Settings configuration for the Django project.

The project carries no database, middleware or URL routing: it exists
to host the ``trees`` application, its management commands and the
logging/configuration layer they share.
"""

from decimal import Decimal
from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Only used by Django internals (signing); nothing here is secret.
SECRET_KEY = config(
    'DJANGO_SECRET_KEY',
    default='treekit-development-key-change-if-deployed'
)

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS: list[str] = []


# Application definition
INSTALLED_APPS = [
    # Aplicaciones locales
    'trees.apps.TreesConfig',
]

# No persistence: every command reads its input and writes its output.
DATABASES: dict = {}


# Internationalization
LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False
USE_TZ = True


# ============================================================================
# APLICACIÓN ESPECÍFICA
# ============================================================================

# Directorio de plantillas Jinja2 para la salida DOT
DOT_TEMPLATES_DIR = BASE_DIR / 'trees' / 'templates_dot'

# Four-point scan: exhaustive up to this many points
FOUR_POINT_EXHAUSTIVE_LIMIT = config(
    'FOUR_POINT_EXHAUSTIVE_LIMIT',
    default=40,
    cast=int,
)

# Quadruples drawn above the limit (0 = always exhaustive)
FOUR_POINT_SAMPLES = config('FOUR_POINT_SAMPLES', default=0, cast=int)

# Only applied to metrics that are not integer valued
FOUR_POINT_TOLERANCE = config(
    'FOUR_POINT_TOLERANCE',
    default='0',
    cast=Decimal,
)

# Default seed for random excursions and sampled scans
TREEKIT_SEED = config('TREEKIT_SEED', default=0, cast=int)


# Logging
# Diagnostics go to stderr; stdout is reserved for command output.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': config('DJANGO_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
        'trees': {
            'handlers': ['console'],
            'level': config('TREEKIT_LOG_LEVEL', default='WARNING'),
            'propagate': False,
        },
    },
}
