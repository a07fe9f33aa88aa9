# alpha_core/management/commands/alpha_exp.py
"""
α-exponente: la serie truncada, o una tabla serie vs. exp(x^α/α).

Uso:
    alpha-calc exp --alpha 1/2 --terms 10
    alpha-calc exp --alpha 1/3 --terms 40 --grid 0.5:2:0.5
"""
from alpha_core.alpha_exp import alpha_exp_eval, alpha_exp_series
from alpha_core.management.base import KernelCommand
from alpha_core.puiseux import evaluate, grid_points


class Command(KernelCommand):
    help = "Builds the alpha-exponent series, or samples it against its closed form as CSV"

    def add_arguments(self, parser):
        self.add_alpha_argument(parser)
        parser.add_argument(
            "--terms", type=int, default=10, help="Number N of retained terms (default 10)"
        )
        parser.add_argument("--grid", help="start:stop:step, x > 0")

    def handle(self, *args, **options):
        alpha = self.alpha_option(options)
        with self.blame("--terms"):
            expansion = alpha_exp_series(alpha, options["terms"])

        if options["grid"] is None:
            self.emit_json(expansion.series)
            return

        with self.blame("--grid"):
            rows = [
                (float(x), evaluate(expansion.series, x).re, alpha_exp_eval(x, alpha))
                for x in grid_points(*self.grid_option(options))
            ]
        self.emit_csv(["x", "series", "closed_form"], rows)
