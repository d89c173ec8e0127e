"""
Gestor (Manager) Package - Graph Energy Toolkit

This package contains the manager classes that coordinate experiments.
Each manager integrates the models, the spectral algorithms and the
predictors, and leaves file output to utils.archivo_handler.

Managers:
    - GestorExperimentos: Monte Carlo sweeps including:
                         * Deterministic per-trial seeds
                         * Serial or multiprocessing execution
                         * Batch verdicts against predictions
                         * Laplacian-dominance rate
                         * Degree-window and diameter audit

    - GestorVerificacion: The acceptance battery run by `verify`:
                         * Monte Carlo checks of the predictors
                         * Exact oracles for the eigensolver
                         * Metamorphic checks (scaling, trace, determinism)

Data Flow:
    CLI → Gestor Layer → (Models + Spectral algorithms + Predictors) → Output
"""

from gestor.gestor_experimentos import GestorExperimentos, margen, tasa_dominancia
from gestor.gestor_verificacion import GestorVerificacion, ResultadoComprobacion

__all__ = [
    'GestorExperimentos',
    'GestorVerificacion',
    'ResultadoComprobacion',
    'margen',
    'tasa_dominancia',
]

__version__ = '1.0.0'
