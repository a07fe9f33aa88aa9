# alpha_core/management/commands/alpha_integrate.py
"""
α-integral término a término.

Uso:
    alpha-calc integrate --alpha 1/2 --expr "1 + x^(1/2)"
"""
from alpha_core.alpha_calc import alpha_integral
from alpha_core.management.base import KernelCommand


class Command(KernelCommand):
    help = "Applies the alpha-integral to a Puiseux series and prints it as JSON"

    def add_arguments(self, parser):
        self.add_alpha_argument(parser)
        parser.add_argument("--expr", required=True, help="Series expression or JSON object")
        self.add_domain_argument(parser)

    def handle(self, *args, **options):
        alpha = self.alpha_option(options)
        f = self.series_option(options, "expr", options["domain"])
        # x^(−α) no tiene α-integral
        with self.blame("--expr"):
            result = alpha_integral(f, alpha)
        self.emit_json(result)
