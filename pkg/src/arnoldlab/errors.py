"""Exception types shared across the toolkit."""


class ArnoldLabError(Exception):
    """Base class for all toolkit-specific errors."""


class DomainError(ArnoldLabError):
    """An operation was requested outside its mathematical domain
    (e.g. rotation numbers for a non-invertible map)."""


class DegenerateCritical(ArnoldLabError):
    """The map has the single degenerate critical point at the cusp b = 1.

    Carries the (point, value) pair so callers that can handle the
    degenerate case do not need a second evaluation.
    """

    def __init__(self, point: float, value: float):
        self.point = point
        self.value = value
        super().__init__(f"degenerate critical point at theta={point!r} (b=1)")


class NoConvergence(ArnoldLabError):
    """Root polishing failed to reach the requested residual."""


class PeriodMismatch(ArnoldLabError):
    """A cycle refined to a shorter true period than claimed.

    The refined cycle (at its true period) is attached as ``cycle``.
    """

    def __init__(self, claimed: int, actual: int, cycle):
        self.claimed = claimed
        self.actual = actual
        self.cycle = cycle
        super().__init__(f"claimed period {claimed}, true period {actual}")


class NoSignChange(ArnoldLabError):
    """A bracketed scan found no zero crossing at scan resolution."""


class ContinuationStall(ArnoldLabError):
    """Locus continuation could not restore the tracked relation."""


class NoSecondRelation(ArnoldLabError):
    """No second critical relation found along the scanned locus range.

    ``b_range`` records the (start, end) of the scanned interval.
    """

    def __init__(self, b_range):
        self.b_range = b_range
        super().__init__(f"no second relation in scanned b-range {b_range}")


class SearchFailed(ArnoldLabError):
    """A perturbation search exhausted its sample budget."""


class InvalidRegion(ArnoldLabError):
    """Raster region is empty or outside the supported parameter ranges."""
