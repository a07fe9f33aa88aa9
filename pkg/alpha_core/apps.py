# alpha_core/apps.py
from django.apps import AppConfig


class AlphaCoreConfig(AppConfig):
    name    = "alpha_core"
    label   = "alpha_core"
    verbose_name = "Alpha Core"
