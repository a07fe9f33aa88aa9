# alpha_core/management/commands/alpha_check.py
"""
Corre una suite de verificación de leyes.

Uso:
    alpha-calc check leibnitz --cases 500 --seed 42
    # leibnitz: 500/500 residuals exactly zero

Sale con código 1 si algún caso falla.
"""
from django.core.management.base import CommandError

from alpha_core.checks import SUITES, check_suite
from alpha_core.conf import get_default_seed
from alpha_core.management.base import KernelCommand


class Command(KernelCommand):
    help = f"Runs a law-check suite ({', '.join(SUITES)}) and prints its report"

    def add_arguments(self, parser):
        parser.add_argument("name", help="Suite name")
        parser.add_argument("--cases", type=int, default=100, help="Number of random cases")
        parser.add_argument(
            "--seed", type=int, default=None, help="Random seed (default ALPHA_CALC_DEFAULT_SEED)"
        )

    def handle(self, *args, **options):
        seed = get_default_seed() if options["seed"] is None else options["seed"]
        flag = "--cases" if options["name"] in SUITES else "name"
        with self.blame(flag):
            report = check_suite(options["name"], options["cases"], seed)
        self.stdout.write(report.render())
        if not report.ok:
            failed = report.cases - report.passed
            raise CommandError(f"{report.name}: {failed} case(s) failed", returncode=1)
