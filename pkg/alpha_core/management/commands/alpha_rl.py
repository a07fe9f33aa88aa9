# alpha_core/management/commands/alpha_rl.py
"""
Operador Riemann–Liouville sobre series.

Modos:
    series       D^α f
    gap          D^α(fg) − g·D^αf − f·D^αg
    partial-sum  Σ_{n≤N} binom(α,n)·D^(α−n)f·g⁽ⁿ⁾

Uso:
    alpha-calc rl --alpha 1/2 --expr "x"
    alpha-calc rl --alpha 1/2 --expr "x" --mode gap --with "x"
    alpha-calc rl --alpha 1/2 --expr "x" --mode partial-sum --with "x" --terms 2
"""
from django.core.management.base import CommandError

from alpha_core.alpha_calc import rl_deriv_series, rl_leibnitz_partial_sum, rl_two_term_gap
from alpha_core.management.base import KernelCommand


class Command(KernelCommand):
    help = "Riemann-Liouville derivative of a series, its two-term gap or binomial partial sum"

    def add_arguments(self, parser):
        self.add_alpha_argument(parser)
        parser.add_argument("--expr", required=True, help="Series f")
        parser.add_argument(
            "--mode", choices=["series", "gap", "partial-sum"], default="series"
        )
        parser.add_argument("--with", dest="other", help="Second factor g (gap, partial-sum)")
        parser.add_argument(
            "--terms", type=int, default=2, help="Last index N of the binomial sum (default 2)"
        )

    def handle(self, *args, **options):
        alpha = self.alpha_option(options)
        f = self.series_option(options, "expr")
        mode = options["mode"]

        if mode == "series":
            with self.blame("--expr"):
                result = rl_deriv_series(f, alpha)
            self.emit_json(result)
            return

        if options["other"] is None:
            raise CommandError(f"--with is required in mode '{mode}'", returncode=2)
        g = self.series_option(options, "other")
        with self.blame("--with"):
            if mode == "gap":
                result = rl_two_term_gap(f, g, alpha)
            else:
                result = rl_leibnitz_partial_sum(f, g, alpha, options["terms"])
        self.emit_json(result)
