"""
G(n, p) Generator - Graph Energy Toolkit

This module samples Erdos-Renyi random graphs G(n, p): each of the
n(n-1)/2 vertex pairs is included independently with probability p.

Reproducibility:
    Pairs are visited in lexicographic order (0,1), (0,2), ..., (n-2,n-1)
    and one uniform draw in [0, 1) is consumed per pair from numpy's PCG64
    bit generator seeded with the 64-bit seed. PCG64 output is specified
    bit-for-bit, so the same (n, p, seed) yields the same graph on every
    platform. A pair is an edge when its draw is < p, so p = 0 gives the
    empty graph and p = 1 the complete graph.

Time Complexity: O(n^2)
"""

import logging

import numpy as np

from models.grafo import Grafo
from utils.excepciones import ParametroInvalidoError, ProbabilidadInvalidaError
from utils.validaciones import validar_entero_positivo, validar_probabilidad, validar_semilla

logger = logging.getLogger("GraphEnergy.grafos")


def generar_gnp(n, p, semilla):
    """
    Sample a G(n, p) random graph deterministically from a seed.

    Args:
        n (int): Number of vertices (>= 1)
        p (float): Edge probability in [0, 1]
        semilla (int): 64-bit seed

    Returns:
        Grafo: Sampled graph

    Raises:
        ProbabilidadInvalidaError: If p is outside [0, 1]
        ParametroInvalidoError: If n < 1 or the seed is not a 64-bit integer

    Example:
        >>> generar_gnp(5, 1.0, 0).m
        10
    """
    resultado = validar_probabilidad(p)
    if not resultado['valido']:
        raise ProbabilidadInvalidaError(resultado['mensaje'])

    for validacion in (validar_entero_positivo(n, "n", minimo=1), validar_semilla(semilla)):
        if not validacion['valido']:
            raise ParametroInvalidoError(validacion['mensaje'])

    filas, columnas = np.triu_indices(n, k=1)
    generador = np.random.Generator(np.random.PCG64(semilla))
    sorteos = generador.random(filas.shape[0])
    elegidas = sorteos < p

    grafo = Grafo(n, zip(filas[elegidas].tolist(), columnas[elegidas].tolist()))
    logger.debug("Sampled G(%d, %s) with seed %d: m=%d", n, p, semilla, grafo.m)
    return grafo
