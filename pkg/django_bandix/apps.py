from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class BandixConfig(AppConfig):
    name = 'django_bandix'
    verbose_name = _('Band index bounds')
