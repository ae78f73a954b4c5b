"""
Math Module
-----------
The math module collects small numerical helpers shared by the metric, coding,
and analysis modules: logarithms in an arbitrary base, exact integer code
lengths, evenly spaced grids, and Student-t tail probabilities. Functions are
written to operate on numpy arrays where that makes sense.

"""

import numpy as np

from scipy import special


def log_b(x: float | np.ndarray, base: float = 2) -> float | np.ndarray:
    """
    Return the logarithm of ``x`` in base ``base``.

    Parameters
    ----------
    x : float | np.array
        Positive input value(s).
    base : float, optional
        Logarithm base. The default is 2.

    Returns
    -------
    log_x : float | np.array
        ``log(x) / log(base)``.

    """
    return np.log(x) / np.log(base)


def ceil_log(n: int, base: int = 2) -> int:
    """
    Return the smallest integer ``k >= 0`` with ``base**k >= n``.

    Parameters
    ----------
    n : int
        Positive integer.
    base : int, optional
        Integer base >= 2. The default is 2.

    Returns
    -------
    k : int
        ``ceil(log_base(n))`` computed with integer arithmetic, so exact
        powers never round up.

    """

    k, power = 0, 1
    while power < n:
        power *= base
        k += 1

    return k


def grid(start: float, stop: float, step: float) -> np.ndarray:
    """
    Return an evenly spaced grid that includes both endpoints.

    Parameters
    ----------
    start : float
        First grid point.
    stop : float
        Last grid point. Included when it lies on the grid (within 1e-9 of a
        step multiple).
    step : float
        Grid spacing, > 0.

    Returns
    -------
    points : 1D np.array
        ``start + k*step`` for ``k = 0, 1, ...`` up to ``stop``. Points are
        rounded to 12 decimals to remove accumulated float noise.

    Raises
    ------
    ValueError
        'step' must be positive.
    ValueError
        'start' cannot exceed 'stop'.

    """

    if step <= 0.:
        raise ValueError(f"'step' must be positive, got {step}.")
    elif start > stop:
        raise ValueError(f"'start' ({start}) cannot exceed 'stop' ({stop}).")

    num = int(np.floor((stop - start) / step + 1e-9)) + 1
    points = np.round(start + step*np.arange(num), 12)

    return points


def t_pvalue(t: float | np.ndarray, df: int) -> float | np.ndarray:
    """
    Return two-sided p-values of a Student-t statistic.

    Parameters
    ----------
    t : float | np.array
        t statistic(s). Infinite values give a p-value of zero.
    df : int
        Degrees of freedom, >= 1.

    Returns
    -------
    p : float | np.array
        ``P(|T| >= |t|)`` for ``T ~ t(df)``.

    Notes
    -----
    Uses the identity ``P(|T| >= |t|) = I_x(df/2, 1/2)`` with
    ``x = df / (df + t**2)``, where ``I_x`` is the regularized incomplete
    beta function.

    """

    t = np.asarray(t, dtype=float)
    with np.errstate(divide='ignore', invalid='ignore'):
        x = np.where(np.isinf(t), 0., df / (df + t**2))

    p = special.betainc(0.5*df, 0.5, x)

    return p.item() if p.ndim == 0 else p


def param_combinations(params: list[str],
                       values: list[np.ndarray]) -> list[dict]:
    """
    Generate all possible combinations for a set of parameters given their
    possible values.

    Parameters
    ----------
        params : list[str]
            List of parameter names, e.g., ``['vocab_size', 'temperature']``.
        values : list[1D array]
            List of possible values for each parameter. The array in each
            index ``i`` should correspond to the variable given in ``params``
            with the same index.

    Returns
    -------
        combinations : list[dict]
            List of dictionaries representing all possible combinations of
            parameter values.

    """

    from itertools import product

    combinations = []
    for combination in product(*values):
        combinations.append({k: v for k, v in zip(params, combination)})

    return combinations
