"""
Predictores Package - Graph Energy Toolkit

Leading-order formulas for the energies of weighted G(n, p) matrices.

Modules:
    - asintoticos: Point predictions, brackets, bulk location and case analysis
"""

from .asintoticos import (
    clasificar_caso,
    fila_tabla,
    intervalo_weyl_distancia,
    margen_conjetura,
    predecir,
    predecir_bulto,
    predecir_energia_adyacencia,
    predecir_energia_wf,
    predecir_intervalo_le,
    predecir_lel_adyacencia,
    predecir_lel_ie,
)

__all__ = [
    'predecir',
    'predecir_lel_ie',
    'predecir_lel_adyacencia',
    'predecir_intervalo_le',
    'predecir_energia_wf',
    'predecir_energia_adyacencia',
    'predecir_bulto',
    'clasificar_caso',
    'intervalo_weyl_distancia',
    'margen_conjetura',
    'fila_tabla',
]

__version__ = '1.0.0'
