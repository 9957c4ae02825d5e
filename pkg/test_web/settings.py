"""
Django settings for the bandix development project.

For more information on this file, see
https://docs.djangoproject.com/en/3.2/topics/settings/
"""

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
import os
import sys
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = 'bandix-development-only-key'

DEBUG = True

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'django_bandix',
]

BANDIX_SPANNING_TREE_BUDGET = 10000
BANDIX_HILL_CLIMB_ROUNDS = 64
BANDIX_THETA_NEGATIVE_SIGNS = True
BANDIX_DEFAULT_FORMAT = 'text'

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

LOGGING_LEVEL = 'DEBUG' if DEBUG else 'INFO'
if 'test' in sys.argv:
    LOGGING_LEVEL = 'CRITICAL'

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(asctime)s %(module)s %(process)d %(thread)d %(message)s'
        },
        'simple': {
            'format': '%(levelname)s %(message)s'
        },
    },
    'handlers': {
        'console': {
            'level': LOGGING_LEVEL,
            'class': 'logging.StreamHandler',
            'formatter': 'simple'
        }
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'propagate': True,
        },
        'django_bandix': {
            'handlers': ['console'],
            'level': LOGGING_LEVEL,
            'propagate': False,
        },
    }
}
