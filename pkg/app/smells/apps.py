from django.apps import AppConfig


class SmellsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'smells'
