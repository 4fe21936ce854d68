"""
Django settings for pvlab.
Exact-arithmetic laboratory for Parsell–Vinogradov systems and the
exponent bookkeeping of their decoupling inequalities.
"""
import os
from pathlib import Path

import dj_database_url
from django.core.exceptions import ImproperlyConfigured

# ─── Paths ────────────────────────────────────────────────────────────────────
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get(
    "DJANGO_SECRET_KEY",
    "pvlab-insecure-local-only-key",
)

DEBUG = os.environ.get("DJANGO_DEBUG", "False").lower() in ("true", "1", "yes")

ALLOWED_HOSTS: list[str] = []


def _env_int(name, default):
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ImproperlyConfigured(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ImproperlyConfigured(f"{name} must be positive, got {value}")
    return value


# ─── Application Definition ──────────────────────────────────────────────────
INSTALLED_APPS = [
    # Local apps
    "monomials.apps.MonomialsConfig",
    "counting.apps.CountingConfig",
    "expsums.apps.ExpsumsConfig",
    "numerology.apps.NumerologyConfig",
    "transversality.apps.TransversalityConfig",
    "lab.apps.LabConfig",
]

# ─── Database ────────────────────────────────────────────────────────────────
# The run archive (`--save`) lives in DATABASE_URL when it names a real
# backend, otherwise in a local SQLite file.
DATABASE_URL = os.environ.get("DATABASE_URL", "").strip()
_url_has_scheme = (
    DATABASE_URL
    and "://" in DATABASE_URL
    and DATABASE_URL.index("://") > 0
)
if _url_has_scheme:
    DATABASES = {
        "default": dj_database_url.parse(DATABASE_URL, conn_max_age=600)
    }
else:
    DATABASES = {
        "default": {
            "ENGINE": "django.db.backends.sqlite3",
            "NAME": BASE_DIR / "db.sqlite3",
        }
    }

# ─── Internationalization ────────────────────────────────────────────────────
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

# ─── Misc ────────────────────────────────────────────────────────────────────
DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# ─── Lab knobs (flags on the command line win over these) ────────────────────
PVLAB = {
    "VERSION": "1.0.0",
    "THREADS": _env_int("PVLAB_THREADS", os.cpu_count() or 1),
    "MEM_CAP": _env_int("PVLAB_MEM_CAP", 2 * 1024 ** 3),
    "BRUTE_CAP": _env_int("PVLAB_BRUTE_CAP", 10 ** 8),
    "GRID_CAP": _env_int("PVLAB_GRID_CAP", 2 * 10 ** 6),
    "SEED": _env_int("PVLAB_SEED", 7),
    "SUBSPACE_BOX": 9,
}

# ─── Logging ─────────────────────────────────────────────────────────────────
LOG_LEVEL = os.environ.get("PVLAB_LOG_LEVEL", "WARNING").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "[{levelname}] {asctime} {name} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "ERROR",
            "propagate": False,
        },
        **{
            app: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
            for app in ("monomials", "counting", "expsums", "numerology", "transversality", "lab")
        },
    },
}
