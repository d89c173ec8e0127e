"""
Models Package - Graph Energy Toolkit

This package contains the value objects the toolkit passes around. All of
them are immutable after construction (or treated as such) and safe to
share between threads and worker processes.

Classes:
    - Grafo, TablaDistancias, EstadisticasGrafo: Graphs and their structure
    - MatrizSimetrica, MediaPonderada: Weighted matrices
    - Espectro, HistogramaESD: Eigenvalues and their distribution
    - ReporteEnergia, Prediccion, RegistroEnsayo, VeredictoLote: Results
    - ConfiguracionBarrido: Parameters of a Monte Carlo sweep
"""

from models.grafo import INFINITO, EstadisticasGrafo, Grafo, TablaDistancias
from models.matriz import MatrizSimetrica, MediaPonderada
from models.espectro import Espectro, HistogramaESD
from models.reportes import (
    EntradaVeredicto,
    Prediccion,
    RegistroEnsayo,
    ReporteEnergia,
    VeredictoLote,
)
from models.configuracion_barrido import ConfiguracionBarrido, cargar_configuracion

__all__ = [
    'INFINITO',
    'Grafo',
    'TablaDistancias',
    'EstadisticasGrafo',
    'MatrizSimetrica',
    'MediaPonderada',
    'Espectro',
    'HistogramaESD',
    'ReporteEnergia',
    'Prediccion',
    'RegistroEnsayo',
    'EntradaVeredicto',
    'VeredictoLote',
    'ConfiguracionBarrido',
    'cargar_configuracion',
]

__version__ = '1.0.0'
