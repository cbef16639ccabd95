from django.apps import AppConfig


class GainConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'gain'
    verbose_name = 'Potential gain'
