# alpha_core/management/commands/alpha_qpot.py
"""
Potencial cuántico fraccionario Q_α = −D_α ħ² d²_αR / R.

Sin --grid imprime la serie; con --grid imprime CSV "x,Q_alpha".
En stderr se reporta trunc y el orden de Q_α: la muestra sólo es
confiable para x por debajo del cero más cercano de R.

Uso:
    alpha-calc qpot --alpha 1 --R "1+x^2" --Dalpha 1/2 --hbar 1 --trunc 12 --grid 0.1:0.9:0.1
"""
from alpha_core.madelung import quantum_potential, sample_qpotential
from alpha_core.management.base import KernelCommand
from alpha_core.puiseux import valuation


class Command(KernelCommand):
    help = "Fractional quantum potential of an amplitude series, as JSON or sampled CSV"

    def add_arguments(self, parser):
        self.add_alpha_argument(parser)
        parser.add_argument("--R", dest="R", required=True, help="Amplitude series R")
        parser.add_argument("--Dalpha", dest="Dalpha", required=True, help="Constant D_alpha")
        parser.add_argument("--hbar", required=True, help="Reduced Planck constant, > 0")
        parser.add_argument(
            "--trunc", default=None, help="Truncation order T (default ALPHA_CALC_DEFAULT_TRUNC)"
        )
        parser.add_argument("--grid", help="start:stop:step, x > 0")

    def handle(self, *args, **options):
        alpha = self.alpha_option(options)
        R = self.series_option(options, "R")
        Dalpha = self.rational_option(options, "Dalpha")
        hbar = self.rational_option(options, "hbar")
        T = self.trunc_option(options)

        with self.blame("--R"):
            potential = quantum_potential(R, alpha, Dalpha, hbar, T)
        self.stderr.write(f"# trunc={T} order={valuation(potential)}")

        if options["grid"] is None:
            self.emit_json(potential)
            return

        grid = self.grid_option(options)
        with self.blame("--grid"):
            samples = sample_qpotential(R, alpha, Dalpha, hbar, T, grid)
        self.emit_csv(["x", "Q_alpha"], samples)
