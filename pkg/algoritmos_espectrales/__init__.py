"""
Algoritmos Espectrales Package - Graph Energy Toolkit

Weighted matrices of a graph, their eigenvalues and the energy functionals.

Modules:
    - matrices: W_f, A_f, L_f, L_f_plus, A, L, L+ and the L_1 + L_2 split
    - valores_propios: Symmetric eigensolver and spectrum statistics
    - energias: E, LE, LE+, LEL and IE
"""

from .matrices import (
    construir_adyacencia_ponderada,
    construir_distancia_ponderada,
    construir_familia_laplaciana,
    construir_no_ponderadas,
    construir_por_nombre,
    contexto_para,
    descomponer_laplaciano,
    laplaciano_completo,
    laplaciano_sin_signo_completo,
    volcar_matriz,
)
from .valores_propios import (
    cotas_weyl,
    espectro_desde_valores,
    fraccion_bulto,
    histograma_esd,
    radio_espectral,
    valores_propios_simetricos,
)
from .energias import energia, energia_laplaciana, lel, reporte_completo

__all__ = [
    'construir_distancia_ponderada',
    'construir_adyacencia_ponderada',
    'construir_familia_laplaciana',
    'construir_no_ponderadas',
    'construir_por_nombre',
    'contexto_para',
    'descomponer_laplaciano',
    'laplaciano_completo',
    'laplaciano_sin_signo_completo',
    'volcar_matriz',
    'valores_propios_simetricos',
    'espectro_desde_valores',
    'radio_espectral',
    'fraccion_bulto',
    'histograma_esd',
    'cotas_weyl',
    'energia',
    'energia_laplaciana',
    'lel',
    'reporte_completo',
]

__version__ = '1.0.0'
