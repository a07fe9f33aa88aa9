# alpha_core/management/commands/alpha_madelung.py
"""
Residuos de la separación de Madelung para un estado dado.

Salida JSON:
    {"continuity": …, "hamilton_jacobi": …,          ecuaciones impresas
     "derived": {"continuity": …, "hamilton_jacobi": …},
     "audit": {"imaginary": …, "real": …},
     "quantum_potential": …}
"""
from alpha_core.madelung import (
    MadelungState,
    continuity_residual,
    derivation_audit,
    derived_split,
    hj_residual,
    quantum_potential,
    require_field,
)
from alpha_core.management.base import KernelCommand


class Command(KernelCommand):
    help = "Evaluates the Madelung split residuals and the derivation audit for a state"

    def add_arguments(self, parser):
        self.add_alpha_argument(parser)
        for flag, label in (
            ("R", "amplitude"),
            ("S", "action"),
            ("Rt", "time derivative of R"),
            ("St", "time derivative of S"),
        ):
            parser.add_argument(f"--{flag}", dest=flag, required=True, help=f"Series: {label}")
        parser.add_argument("--V", dest="V", default="0", help="Potential series (default 0)")
        parser.add_argument("--Dalpha", dest="Dalpha", required=True, help="Constant D_alpha")
        parser.add_argument("--hbar", required=True, help="Reduced Planck constant, > 0")
        parser.add_argument("--trunc", default=None, help="Truncation order of Q_alpha")

    def handle(self, *args, **options):
        alpha = self.alpha_option(options)
        fields = []
        for name in ("R", "S", "Rt", "St", "V"):
            series = self.series_option(options, name)
            with self.blame(f"--{name}"):
                require_field(series, name)
            fields.append(series)
        R, S, R_t, S_t, V = fields
        Dalpha = self.rational_option(options, "Dalpha")
        hbar = self.rational_option(options, "hbar")
        T = self.trunc_option(options)

        with self.blame("--hbar"):
            state = MadelungState(R, S, R_t, S_t, V, hbar, Dalpha, alpha)
        derived = derived_split(state)
        imaginary, real = derivation_audit(R, S, S_t, R_t, alpha, hbar, V=V, Dalpha=Dalpha)
        with self.blame("--R"):
            potential = quantum_potential(R, alpha, Dalpha, hbar, T)

        self.emit_json(
            {
                "continuity": continuity_residual(state),
                "hamilton_jacobi": hj_residual(state),
                "derived": {
                    "continuity": derived.continuity,
                    "hamilton_jacobi": derived.hamilton_jacobi,
                },
                "audit": {"imaginary": imaginary, "real": real},
                "quantum_potential": potential,
            }
        )
