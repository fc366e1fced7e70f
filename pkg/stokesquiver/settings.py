"""
Django settings for the stokesquiver project.

The project has no web surface and no database: Django supplies the
management-command runner, forms for reading input documents, logging
configuration and the test runner.
"""

from pathlib import Path
import os
from dotenv import load_dotenv

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent

# Only used by Django internals; nothing here is signed or served.
SECRET_KEY = os.getenv('SECRET_KEY', 'stokesquiver-local')

DEBUG = os.getenv('DEBUG', 'False').lower() in ('1', 'true', 'yes')

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'app',
]

DATABASES = {}

USE_I18N = False


# Logging goes to stderr; stdout carries only output documents.

LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'app': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}


# Numerical continuation for branched covers. Fixed in code so that results
# are reproducible; command-line flags override individual values per run.

STOKESQUIVER_CONTINUATION = {
    'corrector_tolerance': 1e-12,
    'corrector_max_iterations': 25,
    'slow_corrector': 5,
    'residual_bound': 1e-9,
    'matching_ratio': 10.0,
    'snap_tolerance': 1e-9,
    'snap_max_denominator': 10**6,
    'snap_warn_denominator': 10**3,
    'initial_step': 0.05,
    'minimum_step': 1e-9,
    'workers': 4,
}
