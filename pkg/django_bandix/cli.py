"""
``bandix`` console script: runs the bandix management command without a project.
"""
import os
import sys

from django.conf import settings
from django.core.management import execute_from_command_line


def configure():
    if settings.configured or os.environ.get('DJANGO_SETTINGS_MODULE'):
        return
    settings.configure(
        INSTALLED_APPS=['django_bandix'],
        USE_I18N=True,
        LOGGING={
            'version': 1,
            'disable_existing_loggers': False,
            'handlers': {
                'console': {'level': 'WARNING', 'class': 'logging.StreamHandler'},
            },
            'loggers': {
                'django_bandix': {'handlers': ['console'], 'level': 'WARNING'},
            },
        },
    )


def main(argv=None):
    configure()
    argv = sys.argv[1:] if argv is None else argv
    execute_from_command_line(['bandix', 'bandix'] + list(argv))


if __name__ == '__main__':
    main()
