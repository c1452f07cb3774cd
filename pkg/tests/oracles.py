"""Independent reference evaluators used only by the tests."""

import mpmath as mp


def j_series(l, x, dps=30):
    """J_l(x) from its ascending series in extended precision."""
    with mp.workdps(dps):
        x = mp.mpf(x)
        half = x / 2
        t = half**l / mp.factorial(l)
        s = t
        k = 0
        while True:
            k += 1
            t *= -half * half / (k * (k + l))
            s += t
            if abs(t) < mp.mpf(10) ** (-dps - 3) * (1 + abs(s)):
                return float(s)


def k_integral(l, x, dps=30):
    """K_l(x) = int_0^inf exp(-x cosh t) cosh(l t) dt."""
    with mp.workdps(dps):
        x = mp.mpf(x)
        return float(mp.quad(lambda t: mp.exp(-x * mp.cosh(t)) * mp.cosh(l * t), [0, 1, 3, 8, 20]))
