"""
Django settings for the key class analysis project.

The project has no web front end: it is driven through management
commands (``python manage.py report --source DIR``). Analysis defaults
live in ``KEYCLASS`` and can be overridden from the environment, from a
JSON ``--config`` file or from command flags, in that order.
"""
import os

SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'keyclass-local-only')

DEBUG = os.environ.get('DJANGO_DEBUG', '0') == '1'

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'core',
    'gain',
    'extractor',
    'metrics',
    'ranking',
    'smells',
    'report',
]

# Nothing is persisted; Django falls back to its dummy backend.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

# Analysis defaults

KEYCLASS = {
    'discount': os.environ.get('KEYCLASS_DISCOUNT', 'reciprocal'),
    'gamma': os.environ.get('KEYCLASS_GAMMA', '0.5'),
    'dmax': os.environ.get('KEYCLASS_D_MAX', '15'),
    'top': os.environ.get('KEYCLASS_TOP_N', '15'),
    'key_percentile': os.environ.get('KEYCLASS_KEY_PERCENTILE', '99'),
    'key_min_metrics': os.environ.get('KEYCLASS_KEY_MIN_METRICS', '3'),
    'self_ref_threshold': os.environ.get('KEYCLASS_SELF_REF_THRESHOLD', '5'),
    'large_class': os.environ.get('KEYCLASS_LARGE_CLASS', '50'),
    'primitive_fraction': os.environ.get('KEYCLASS_PRIMITIVE_FRACTION',
                                         '0.8'),
    'primitive_min_attributes': os.environ.get(
        'KEYCLASS_PRIMITIVE_MIN_ATTRIBUTES', '15'),
    'long_method': os.environ.get('KEYCLASS_LONG_METHOD', '50'),
    'constructors': os.environ.get('KEYCLASS_CONSTRUCTORS', '3'),
    'format': os.environ.get('KEYCLASS_FORMAT', 'markdown'),
}

# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.environ.get('KEYCLASS_LOG_LEVEL', 'WARNING'),
    },
}
