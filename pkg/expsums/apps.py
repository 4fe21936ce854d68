from django.apps import AppConfig


class ExpsumsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "expsums"
    verbose_name = "Exponential sums"
