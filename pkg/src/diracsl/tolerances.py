from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds used across the package.

    zero_det : relative threshold below which a discriminant (or phi(1))
        is treated as zero.
    root : bisection width for tridiagonal eigenvalues and oracle roots,
        relative to the problem scale.
    dedup : relative spacing under which two real roots are merged.
    ode_rel, ode_abs : tolerances for the adaptive integrator used on
        sampled potentials.
    residual : relative residual a polynomial root must satisfy.
    imag : relative imaginary part below which a companion root is real.
    """

    zero_det: float = 1e-9
    root: float = 1e-12
    dedup: float = 1e-7
    ode_rel: float = 1e-10
    ode_abs: float = 1e-12
    residual: float = 1e-9
    imag: float = 1e-6

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not (isinstance(v, (int, float)) and v > 0 and v < 1):
                raise ValueError(f"tolerance {f.name} must lie in (0, 1), got {v!r}")

    def with_overrides(self, **kw) -> "Tolerances":
        return replace(self, **kw)


DEFAULT_TOLERANCES = Tolerances()
