"""
Utilities Package - Graph Energy Toolkit

Cross-cutting helpers used across the toolkit.

Modules:
    - archivo_handler: All file I/O (edge lists, CSV, JSON, matrix dumps),
                       with stdout as the default destination
    - validaciones: Argument checks returning {'valido', 'mensaje'} results
    - excepciones: Exception hierarchy mapped to command-line exit codes
    - semillas: Deterministic 64-bit seed mixing for parallel trials

Usage:
    from utils.archivo_handler import ArchivoHandler
    from utils.validaciones import validar_probabilidad

    handler = ArchivoHandler()
    texto = handler.leer_texto("data/grafos/k3.txt")
"""

from utils.archivo_handler import ArchivoHandler
from utils.semillas import mezclar_semilla
from utils.validaciones import (
    validar_entero_positivo,
    validar_probabilidad,
    validar_semilla,
)

__all__ = [
    'ArchivoHandler',
    'mezclar_semilla',
    'validar_entero_positivo',
    'validar_probabilidad',
    'validar_semilla',
]

__version__ = '1.0.0'
