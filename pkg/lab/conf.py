"""Access to the PVLAB settings block; explicit overrides win."""
from django.conf import settings


def lab_setting(name, override=None):
    if override is not None:
        return override
    return settings.PVLAB[name]
