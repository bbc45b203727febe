"""Exception types that separate bad input, unsolvable data, and
degenerate configurations (the CLI maps them to distinct exit codes)."""


class InfeasibleProblemError(RuntimeError):
    """The data admits no surface in the supported family (e.g. no
    admissible real root, or a ruling scale pinned to zero)."""


class DegenerateCaseError(RuntimeError):
    """Configurations excluded from the construction on purpose."""


class CylinderCaseError(DegenerateCaseError):
    """Parallel end rulings; the solution would be a cylinder."""


class ConeCaseError(DegenerateCaseError):
    """Intersecting end ruling lines; the solution would be a cone."""


class PlanarSurfaceError(DegenerateCaseError):
    """Curve and rulings lie in one plane; every parameter works and the
    surface is trivially developable."""
