"""
Seed Mixing - Graph Energy Toolkit

Per-trial seeds are derived from (master_seed, cell, trial, ...) with the
SplitMix64 finalizer, so cells are independent of each other and of the
order in which workers pick them up.
"""

MASCARA_64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15


def avalancha_64(x):
    """
    SplitMix64 finalizer: a bijective 64-bit avalanche mix.

    Args:
        x (int): Any integer (reduced modulo 2**64)

    Returns:
        int: Mixed value in [0, 2**64)
    """
    z = (x + _GAMMA) & MASCARA_64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASCARA_64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASCARA_64
    return z ^ (z >> 31)


def mezclar_semilla(semilla_maestra, *componentes):
    """
    Fold any number of integer components into a master seed.

    Args:
        semilla_maestra (int): 64-bit master seed
        *componentes (int): Cell index, trial index, retry index, ...

    Returns:
        int: 64-bit derived seed

    Example:
        >>> mezclar_semilla(1, 0, 0) != mezclar_semilla(1, 0, 1)
        True
    """
    estado = avalancha_64(semilla_maestra & MASCARA_64)
    for componente in componentes:
        estado = avalancha_64(estado ^ (componente & MASCARA_64))
    return estado
