import os

from .logging import getLogger

logger = getLogger(__name__)


class HyperMetConfig:
    """
    Class to store configuration settings.
    """

    # relative triangle tolerance, scaled by the largest matrix entry
    tol_rel = 1e-9
    bisection_tol = 1e-10
    eps_lo = 1e-6
    eps_hi_scale = 64.0
    # point constraints (hyperboloid sheet, unit sphere)
    constraint_tol = 1e-12
    clamp_tol = 1e-8
    tangent_tol = 1e-10
    theta_max = 0.5
    theta_steps = 20
    float_format = "%.16e"
    threads_env = "HYPERMET_THREADS"

    @classmethod
    def threads(cls):
        """Number of worker threads for the quadruple scans

        Returns
        -------
        int
            value of HYPERMET_THREADS if it is a positive integer, otherwise the
            number of available cores
        """
        value = os.environ.get(cls.threads_env)
        if value is not None:
            try:
                n = int(value)
                if n > 0:
                    return n
            except ValueError:
                pass
            logger.warning(f"Ignoring invalid {cls.threads_env}={value!r}")
        return os.cpu_count() or 1
