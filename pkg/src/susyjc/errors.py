"""Exception types shared across the package."""


class SusyJCError(Exception):
    """Base class for all library-specific errors."""


class EqualCouplings(SusyJCError):
    """Rotating and counter-rotating couplings coincide where they must not."""


class DimensionMismatch(SusyJCError):
    """Operands act on spaces of different dimension."""


class InvalidN(SusyJCError):
    """Excitation number outside the allowed range."""


class DegenerateAngle(SusyJCError):
    """Mixing angle undefined because detuning and coupling both vanish."""


class InvalidLabel(SusyJCError):
    """No dressed level with the requested (branch, N) label."""


class TruncationTooSmall(SusyJCError):
    """Requested state does not fit inside the configured Fock cutoff."""


class IsotropicSingularLimit(SusyJCError):
    """Squeezed-frame construction diverges at equal couplings."""


class DegenerateCouplings(SusyJCError):
    """Factorized coupling amplitudes have equal modulus."""


class FactorizationMismatch(SusyJCError):
    """Factorized and explicit Hamiltonian forms disagree beyond tolerance."""


class NotConverged(SusyJCError):
    """Eigen-solution lacks a truncation-convergence certificate."""


class NotHermitian(SusyJCError):
    """Matrix handed to the eigensolver is not Hermitian within tolerance."""


class NoConvergence(SusyJCError):
    """Truncation doubling hit the cap before eigenvalues stabilized."""


class SupportExceeded(SusyJCError):
    """Displaced state leaks past the Fock cutoff beyond tolerance."""
