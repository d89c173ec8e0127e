"""
Weight Registry - Graph Energy Toolkit

Every topological index of the three index tables (degree-based,
distance-based and degree-distance) plus the unweighted adjacency
indicator, each with its analytic asymptotic metadata.

Degrees inside the analytic f1/f2 are set to the expected degree np; the
diameter-dependent indices use diameter 2, which almost every dense
random graph has.

Functions:
    registro: All registry entries, in table order
    nombres_pesos: Canonical identifiers
    obtener_peso: Resolve an identifier
    par_asintotico: (f(1, np, np), f(2, np, np)) with argument checks
    evaluar_entrada: Single evaluation of f(D, d_i, d_j)
"""

import math
from functools import lru_cache

import numpy as np

from config import ALFA_RANDIC
from pesos.funcion_peso import (
    DISTANCIA,
    GRADO_DISTANCIA,
    GRADOS,
    ClaseLimite,
    FuncionPeso,
)
from utils.excepciones import ParametroInvalidoError, ProbabilidadInvalidaError
from utils.validaciones import validar_entero_positivo, validar_probabilidad


INFINITA = ClaseLimite.infinita()


def _cero(n, p):
    return 0.0


def _uno(n, p):
    return 1.0


def _grados(nombre, formula, f1, orden, descripcion, exacta=True, parametros=None):
    """Degree-based entry: f vanishes beyond adjacency, so f2 = 0 and the class is infinite."""
    return FuncionPeso(
        nombre=nombre,
        tipo=GRADOS,
        formula=formula,
        f1=f1,
        f2=_cero,
        clase_limite=INFINITA,
        orden_tabla=orden,
        tabla_exacta=exacta,
        parametros=parametros or {},
        descripcion=descripcion,
    )


def _tabla_grados(alpha):
    """Degree-based indices."""
    return [
        _grados(
            "first_zagreb",
            lambda D, a, b, ctx: a + b,
            lambda n, p: 2 * n * p,
            lambda n, p: math.sqrt(2) * p * n ** 2,
            "d_i + d_j",
        ),
        _grados(
            "second_zagreb",
            lambda D, a, b, ctx: a * b,
            lambda n, p: (n * p) ** 2,
            lambda n, p: p * math.sqrt(p) * n ** 2.5,
            "d_i * d_j",
        ),
        _grados(
            "randic",
            lambda D, a, b, ctx: 1 / np.sqrt(a * b),
            lambda n, p: 1 / (n * p),
            lambda n, p: float(n),
            "1 / sqrt(d_i * d_j)",
        ),
        _grados(
            "general_randic",
            lambda D, a, b, ctx: (a * b) ** alpha,
            lambda n, p: (n * p) ** (2 * alpha),
            lambda n, p: p ** (alpha + 0.5) * n ** (alpha + 1.5),
            f"(d_i * d_j) ^ {alpha:g}",
            parametros={"alpha": alpha},
        ),
        _grados(
            "abc",
            lambda D, a, b, ctx: np.sqrt(a + b - 2) / np.sqrt(a * b),
            lambda n, p: math.sqrt(2 * n * p - 2) / (n * p),
            lambda n, p: (2 * p) ** 0.25 * n ** 1.25,
            "sqrt(d_i + d_j - 2) / sqrt(d_i * d_j)",
            exacta=False,
        ),
        _grados(
            "azi",
            lambda D, a, b, ctx: (a * b / (a + b - 2)) ** 3,
            lambda n, p: ((n * p) ** 2 / (2 * n * p - 2)) ** 3,
            lambda n, p: p ** 2 / (2 * math.sqrt(2)) * n ** 3,
            "(d_i * d_j / (d_i + d_j - 2)) ^ 3",
            exacta=False,
        ),
        _grados(
            "ag",
            lambda D, a, b, ctx: 2 * np.sqrt(a * b) / (a + b),
            _uno,
            lambda n, p: math.sqrt(p) * n ** 1.5,
            "2 sqrt(d_i * d_j) / (d_i + d_j)",
        ),
        _grados(
            "harmonic",
            lambda D, a, b, ctx: 2 / (a + b),
            lambda n, p: 1 / (n * p),
            lambda n, p: float(n),
            "2 / (d_i + d_j)",
        ),
        _grados(
            "sci",
            lambda D, a, b, ctx: 1 / np.sqrt(a + b),
            lambda n, p: 1 / math.sqrt(2 * n * p),
            lambda n, p: (p / 2) ** 0.25 * n ** 1.25,
            "1 / sqrt(d_i + d_j)",
        ),
        _grados(
            "first_multi_zagreb",
            lambda D, a, b, ctx: np.log(a) / a + np.log(b) / b,
            lambda n, p: 2 * math.log(n * p) / (n * p),
            lambda n, p: math.sqrt(2) * n * math.sqrt(math.log(n)),
            "log(d_i) / d_i + log(d_j) / d_j",
            exacta=False,
        ),
        _grados(
            "modified_multi_zagreb",
            lambda D, a, b, ctx: np.log(a + b),
            lambda n, p: math.log(2 * n * p),
            lambda n, p: math.sqrt(p) * n ** 1.5 * math.sqrt(math.log(n)),
            "log(d_i + d_j)",
            exacta=False,
        ),
        _grados(
            "second_multi_zagreb",
            lambda D, a, b, ctx: np.log(a) + np.log(b),
            lambda n, p: 2 * math.log(n * p),
            lambda n, p: math.sqrt(2 * p) * n ** 1.5 * math.sqrt(math.log(n)),
            "log(d_i) + log(d_j)",
            exacta=False,
        ),
        _grados(
            "lanzhou",
            lambda D, a, b, ctx: (ctx.n - 1) * (a + b) - (a ** 2 + b ** 2),
            lambda n, p: (n - 1) * 2 * n * p - 2 * (n * p) ** 2,
            lambda n, p: p * math.sqrt(2 * (1 - p)) * n ** 2.5,
            "(n - 1)(d_i + d_j) - (d_i^2 + d_j^2)",
            exacta=False,
        ),
    ]


def _tabla_distancias():
    """Distance-only indices (degrees ignored)."""
    return [
        FuncionPeso(
            nombre="harary",
            tipo=DISTANCIA,
            formula=lambda D, a, b, ctx: 1 / D,
            f1=_uno,
            f2=lambda n, p: 0.5,
            clase_limite=ClaseLimite.constante(2),
            orden_tabla=lambda n, p: math.sqrt((1 + p) / 2) * n ** 1.5,
            usa_grados=False,
            descripcion="1 / D",
        ),
        FuncionPeso(
            nombre="hyper_wiener",
            tipo=DISTANCIA,
            formula=lambda D, a, b, ctx: (D + D ** 2) / 2,
            f1=_uno,
            f2=lambda n, p: 3.0,
            clase_limite=ClaseLimite.constante(1 / 3),
            orden_tabla=lambda n, p: math.sqrt(3 - 2 * p) * n ** 1.5,
            usa_grados=False,
            descripcion="(D + D^2) / 2",
        ),
        FuncionPeso(
            nombre="rcw",
            tipo=DISTANCIA,
            formula=lambda D, a, b, ctx: 1 / (ctx.diametro + 1 - D),
            f1=lambda n, p: 0.5,
            f2=_uno,
            clase_limite=ClaseLimite.constante(0.5),
            orden_tabla=lambda n, p: math.sqrt(1 - p / 2) * n ** 1.5,
            usa_grados=False,
            descripcion="1 / (diam + 1 - D)",
        ),
        FuncionPeso(
            nombre="reverse_wiener",
            tipo=DISTANCIA,
            formula=lambda D, a, b, ctx: ctx.diametro - D,
            f1=_uno,
            f2=_cero,
            clase_limite=INFINITA,
            orden_tabla=lambda n, p: math.sqrt(p) * n ** 1.5,
            usa_grados=False,
            descripcion="diam - D",
        ),
    ]


def _tabla_grado_distancia():
    """Indices mixing degrees and distance."""
    return [
        FuncionPeso(
            nombre="degree_distance",
            tipo=GRADO_DISTANCIA,
            formula=lambda D, a, b, ctx: (a + b) * D,
            f1=lambda n, p: 2 * n * p,
            f2=lambda n, p: 4 * n * p,
            clase_limite=ClaseLimite.constante(0.5),
            orden_tabla=lambda n, p: math.sqrt(4 * p - 2 * p ** 2) * n ** 2,
            descripcion="(d_i + d_j) * D",
        ),
        FuncionPeso(
            nombre="gutman",
            tipo=GRADO_DISTANCIA,
            formula=lambda D, a, b, ctx: a * b * D,
            f1=lambda n, p: (n * p) ** 2,
            f2=lambda n, p: 2 * (n * p) ** 2,
            clase_limite=ClaseLimite.constante(0.5),
            orden_tabla=lambda n, p: math.sqrt(2 * p ** 2 - p ** 3) * n ** 2.5,
            descripcion="d_i * d_j * D",
        ),
        FuncionPeso(
            nombre="add_harary",
            tipo=GRADO_DISTANCIA,
            formula=lambda D, a, b, ctx: (a + b) / D,
            f1=lambda n, p: 2 * n * p,
            f2=lambda n, p: n * p,
            clase_limite=ClaseLimite.constante(2),
            orden_tabla=lambda n, p: math.sqrt(p + p ** 2) * n ** 2,
            descripcion="(d_i + d_j) / D",
        ),
        FuncionPeso(
            nombre="mult_harary",
            tipo=GRADO_DISTANCIA,
            formula=lambda D, a, b, ctx: a * b / D,
            f1=lambda n, p: (n * p) ** 2,
            f2=lambda n, p: (n * p) ** 2 / 2,
            clase_limite=ClaseLimite.constante(2),
            orden_tabla=lambda n, p: math.sqrt((p ** 2 + p ** 3) / 2) * n ** 2.5,
            descripcion="d_i * d_j / D",
        ),
    ]


SIN_PESO = FuncionPeso(
    nombre="unweighted",
    tipo=GRADOS,
    formula=lambda D, a, b, ctx: np.ones(np.shape(D)),
    f1=_uno,
    f2=_cero,
    clase_limite=INFINITA,
    orden_tabla=lambda n, p: math.sqrt(p) * n ** 1.5,
    usa_grados=False,
    descripcion="1 if D = 1 else 0",
)


@lru_cache(maxsize=16)
def _registro_cacheado(alpha):
    return tuple(_tabla_grados(alpha) + _tabla_distancias() + _tabla_grado_distancia() + [SIN_PESO])


def registro(alpha=None):
    """
    All registry entries in table order, unweighted last.

    Args:
        alpha (float, optional): General Randic exponent. Defaults to
            config.ALFA_RANDIC.

    Returns:
        list: FuncionPeso entries

    Example:
        >>> len(registro())
        22
    """
    alpha = ALFA_RANDIC if alpha is None else float(alpha)
    if not math.isfinite(alpha):
        raise ParametroInvalidoError(f"alpha must be a finite real, got {alpha}")
    return list(_registro_cacheado(alpha))


def nombres_pesos():
    """list: Canonical identifiers in registry order."""
    return [peso.nombre for peso in registro()]


def obtener_peso(nombre, alpha=None):
    """
    Resolve a canonical identifier.

    Args:
        nombre (str): Identifier such as "harary" or "first_zagreb"
        alpha (float, optional): General Randic exponent

    Returns:
        FuncionPeso: The entry

    Raises:
        ParametroInvalidoError: If the name is unknown
    """
    for peso in registro(alpha):
        if peso.nombre == nombre:
            return peso
    raise ParametroInvalidoError(
        f"Unknown weight {nombre!r}; valid names: {', '.join(nombres_pesos())}"
    )


def validar_n_p(n, p):
    """
    Check the arguments of every asymptotic formula: n >= 2 and 0 < p < 1.

    Raises:
        ParametroInvalidoError: If n is not an integer >= 2
        ProbabilidadInvalidaError: If p is outside (0, 1)
    """
    resultado = validar_entero_positivo(n, "n", minimo=2)
    if not resultado['valido']:
        raise ParametroInvalidoError(resultado['mensaje'])
    resultado = validar_probabilidad(p, abierta=True)
    if not resultado['valido']:
        raise ProbabilidadInvalidaError(resultado['mensaje'])


def par_asintotico(peso, n, p):
    """
    (f(1, np, np), f(2, np, np)) for a registry entry.

    Args:
        peso (FuncionPeso): Weight
        n (int): Vertex count (>= 2)
        p (float): Edge probability in (0, 1)

    Returns:
        tuple: (f1, f2)

    Raises:
        DominioPesoError: If the analytic formula leaves the real domain

    Example:
        >>> par_asintotico(obtener_peso("harary"), 1000, 0.3)
        (1.0, 0.5)
    """
    validar_n_p(n, p)
    return peso.par_asintotico(n, p)


def evaluar_entrada(peso, D, di, dj, ctx):
    """
    Evaluate f(D, d_i, d_j) for one pair.

    Args:
        peso (FuncionPeso): Weight
        D (int or float): Distance, INFINITO if unreachable
        di (float): Degree of the first vertex
        dj (float): Degree of the second vertex
        ctx (ContextoPeso): Graph context

    Returns:
        float: Weight value

    Raises:
        DesconexionError: Infinite distance with a distance-dependent weight
    """
    return peso.evaluar(D, di, dj, ctx)
