"""
Pesos Package - Graph Energy Toolkit

Weight functions f(D(i,j), d_i, d_j) and the registry of topological
indices used to build weighted distance matrices.

Modules:
    - funcion_peso: FuncionPeso, ContextoPeso and ClaseLimite
    - registro_pesos: Registry of all indices plus the unweighted indicator
"""

from .funcion_peso import (
    DISTANCIA,
    GRADO_DISTANCIA,
    GRADOS,
    ClaseLimite,
    ContextoPeso,
    FuncionPeso,
)
from .registro_pesos import (
    evaluar_entrada,
    nombres_pesos,
    obtener_peso,
    par_asintotico,
    registro,
    validar_n_p,
)

__all__ = [
    'GRADOS',
    'DISTANCIA',
    'GRADO_DISTANCIA',
    'ClaseLimite',
    'ContextoPeso',
    'FuncionPeso',
    'registro',
    'nombres_pesos',
    'obtener_peso',
    'par_asintotico',
    'evaluar_entrada',
    'validar_n_p',
]

__version__ = '1.0.0'
