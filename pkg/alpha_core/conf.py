# alpha_core/conf.py
"""
Lectura de configuración desde settings del proyecto:

    ALPHA_CALC_DEFAULT_TRUNC = 16        # --trunc y ventana de reciprocal()
    ALPHA_CALC_DEFAULT_SEED  = 0         # semilla de `check`
    ALPHA_CALC_LOG_LEVEL     = "WARNING"

Sin settings configurados (uso del kernel como librería) se usan los
valores por defecto.
"""

import os
from fractions import Fraction

from django.conf import ENVIRONMENT_VARIABLE, settings

DEFAULT_TRUNC = 16
DEFAULT_SEED = 0
DEFAULT_LOG_LEVEL = "WARNING"


def _setting(name, default):
    if not settings.configured and not os.environ.get(ENVIRONMENT_VARIABLE):
        return default
    return getattr(settings, name, default)


def get_default_trunc():
    """Truncamiento por defecto de las series infinitas (1/R, Q_α)."""
    return Fraction(_setting("ALPHA_CALC_DEFAULT_TRUNC", DEFAULT_TRUNC))


def get_default_seed():
    return int(_setting("ALPHA_CALC_DEFAULT_SEED", DEFAULT_SEED))


def get_log_level():
    return str(_setting("ALPHA_CALC_LOG_LEVEL", DEFAULT_LOG_LEVEL)).upper()
