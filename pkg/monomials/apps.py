from django.apps import AppConfig


class MonomialsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "monomials"
    verbose_name = "Monomial systems"
