from django.apps import AppConfig


class TransversalityConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "transversality"
    verbose_name = "Transversality checks"
