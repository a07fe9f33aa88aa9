# alpha_core/management/base.py
"""
Comando base para los subcomandos del kernel.
Cada subcomando hereda e implementa add_arguments() y handle().

Contrato de salida:
    stdout → JSON (series) o CSV (muestras), nada más
    stderr → diagnósticos
    exit 0 éxito · 1 error de dominio/matemático · 2 error de uso

Uso en un subcomando:
    class Command(KernelCommand):
        def handle(self, *args, **options):
            alpha = self.alpha_option(options)
            f = self.series_option(options, "expr")
            with self.blame("--expr"):
                result = alpha_deriv(f, alpha)
            self.emit_json(result)
"""

from contextlib import contextmanager

from django.core.management.base import BaseCommand, CommandError

from ..alpha_calc import as_alpha
from ..codec import dumps, load_series
from ..conf import get_default_trunc
from ..exceptions import AlphaCalcError, UnknownSuiteError
from ..parser import parse_rational


class KernelCommand(BaseCommand):
    requires_system_checks = []

    # ─── Argumentos compartidos ───────────────────────────────────────────────

    def add_alpha_argument(self, parser):
        parser.add_argument(
            "--alpha", required=True, help="Order alpha as p/q or decimal, 0 < alpha <= 1"
        )

    def add_domain_argument(self, parser):
        parser.add_argument(
            "--domain",
            choices=["exact", "approx"],
            default="exact",
            help="Coefficient domain of the parsed series",
        )

    # ─── Errores ──────────────────────────────────────────────────────────────

    @contextmanager
    def blame(self, flag):
        """Convierte errores del kernel en CommandError citando la opción."""
        try:
            yield
        except UnknownSuiteError as e:
            raise CommandError(f"{flag}: {e}", returncode=2) from e
        except (AlphaCalcError, OverflowError, ZeroDivisionError) as e:
            raise CommandError(f"{flag}: {e}", returncode=1) from e

    # ─── Lectura de opciones ──────────────────────────────────────────────────

    def rational_option(self, options, name):
        with self.blame(f"--{name}"):
            return parse_rational(options[name])

    def alpha_option(self, options):
        with self.blame("--alpha"):
            return as_alpha(parse_rational(options["alpha"]))

    def series_option(self, options, name, domain="exact"):
        with self.blame(f"--{name}"):
            return load_series(options[name], domain)

    def trunc_option(self, options, name="trunc"):
        if options[name] is None:
            return get_default_trunc()
        return self.rational_option(options, name)

    def grid_option(self, options, name="grid"):
        """start:stop:step, extremos incluidos."""
        text = options[name]
        pieces = text.split(":")
        if len(pieces) != 3:
            raise CommandError(
                f"--{name}: expected start:stop:step, got {text!r}", returncode=2
            )
        with self.blame(f"--{name}"):
            return tuple(parse_rational(piece) for piece in pieces)

    # ─── Salida ───────────────────────────────────────────────────────────────

    def emit_json(self, payload):
        self.stdout.write(dumps(payload))

    def emit_csv(self, header, rows):
        self.stdout.write(",".join(header))
        for row in rows:
            self.stdout.write(",".join(format(value, ".17g") for value in row))
