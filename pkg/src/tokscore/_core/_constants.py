class Constants:
    """Fixed conventions shared across the package."""

    __slots__ = ()

    _EOW = '\ue000'
    _CONT = '@@'
    _SPACE = '\u2581'
    _TOL = 1e-12
    _BOUND_TOL = 1e-9

    @property
    def EOW(self) -> str:
        """End-of-word marker symbol used inside BPE segmentations."""
        return self._EOW

    @property
    def CONT(self) -> str:
        """Continuation prefix for non-word-initial pieces in output files."""
        return self._CONT

    @property
    def SPACE(self) -> str:
        """Visible stand-in for spaces inside rendered tokens."""
        return self._SPACE

    @property
    def TOL(self) -> float:
        """Numerical tolerance for probability sums and exact limits."""
        return self._TOL

    @property
    def BOUND_TOL(self) -> float:
        """Tolerance for coding-theorem inequalities and identities."""
        return self._BOUND_TOL
