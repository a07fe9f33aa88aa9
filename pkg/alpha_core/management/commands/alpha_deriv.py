# alpha_core/management/commands/alpha_deriv.py
"""
α-derivada de una serie.

Uso:
    alpha-calc deriv --alpha 1/2 --expr "x^(3/2)+2*x"
    python manage.py alpha_deriv --alpha 1/3 --expr "x + x^(2/3)" --order 2
"""
from alpha_core.alpha_calc import alpha_deriv_iter
from alpha_core.management.base import KernelCommand


class Command(KernelCommand):
    help = "Applies the alpha-derivative to a Puiseux series and prints it as JSON"

    def add_arguments(self, parser):
        self.add_alpha_argument(parser)
        parser.add_argument("--expr", required=True, help="Series expression or JSON object")
        parser.add_argument(
            "--order", type=int, default=1, help="Number of applications m (default 1)"
        )
        self.add_domain_argument(parser)

    def handle(self, *args, **options):
        alpha = self.alpha_option(options)
        f = self.series_option(options, "expr", options["domain"])
        with self.blame("--order"):
            result = alpha_deriv_iter(f, alpha, options["order"])
        self.emit_json(result)
