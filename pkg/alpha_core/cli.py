# alpha_core/cli.py
"""
Punto de entrada `alpha-calc`.

Cada subcomando es un management command de la app:

    alpha-calc deriv ...      ≡  python manage.py alpha_deriv ...

Fuera de un proyecto Django se configura un settings mínimo en memoria.
"""

import logging
import os
import sys
from importlib import import_module

import django
from django.conf import ENVIRONMENT_VARIABLE, settings

from .conf import DEFAULT_LOG_LEVEL, get_log_level

logger = logging.getLogger(__name__)

SUBCOMMANDS = {
    name: f"alpha_{name}"
    for name in ("deriv", "integrate", "rl", "exp", "qpot", "madelung", "check")
}

USAGE = (
    "usage: alpha-calc {" + ",".join(SUBCOMMANDS) + "} [options]\n"
    "Run 'alpha-calc <subcommand> --help' for the options of each subcommand.\n"
)


def configure():
    """
    settings.configure() sólo si no hay un módulo de settings activo; luego
    ALPHA_CALC_LOG_LEVEL fija el nivel del logger `alpha_core`.
    """
    if not settings.configured and not os.environ.get(ENVIRONMENT_VARIABLE):
        level = os.environ.get("ALPHA_CALC_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
        settings.configure(
            INSTALLED_APPS=["alpha_core"],
            ALPHA_CALC_LOG_LEVEL=level,
            LOGGING={
                "version": 1,
                "disable_existing_loggers": False,
                "handlers": {
                    "console": {"class": "logging.StreamHandler", "stream": "ext://sys.stderr"},
                },
                "loggers": {
                    "alpha_core": {"handlers": ["console"], "level": level},
                },
            },
        )
    django.setup()
    logging.getLogger("alpha_core").setLevel(get_log_level())


def run(argv, stdout=None, stderr=None) -> int:
    """Ejecuta un subcomando y devuelve el código de salida (0, 1 o 2)."""
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in SUBCOMMANDS:
        if argv and argv[0] not in ("-h", "--help"):
            stderr.write(f"alpha-calc: unknown subcommand {argv[0]!r}\n")
        stderr.write(USAGE)
        return 2

    configure()
    name, rest = argv[0], argv[1:]
    module = import_module(f"alpha_core.management.commands.{SUBCOMMANDS[name]}")
    command = module.Command(stdout=stdout, stderr=stderr)
    logger.debug("dispatching %s %s", name, rest)
    try:
        command.run_from_argv(["alpha-calc", name, *rest])
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    return 0


def main():
    sys.exit(run(sys.argv[1:]))
