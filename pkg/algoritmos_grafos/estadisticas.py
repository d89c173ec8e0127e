"""
Graph Statistics - Graph Energy Toolkit

Structural metrics used by the degree/diameter audit: degrees, minimum and
maximum degree, diameter and connectivity.
"""

import numpy as np

from models.grafo import INFINITO, EstadisticasGrafo


def estadisticas_grafo(grafo, distancias):
    """
    Compute structural statistics of a graph.

    Args:
        grafo (Grafo): Input graph
        distancias (TablaDistancias): Distances computed from the same graph

    Returns:
        EstadisticasGrafo: Degrees, delta, Delta, diameter, connectivity.
            The diameter is the largest finite distance when the graph is
            connected and INFINITO otherwise.

    Example:
        >>> from models.grafo import Grafo
        >>> from algoritmos_grafos.busqueda_anchura import bfs_todos_los_pares
        >>> k4 = Grafo(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        >>> estadisticas_grafo(k4, bfs_todos_los_pares(k4)).diametro
        1
    """
    conexo = distancias.es_conexo()
    if conexo:
        diametro = int(np.max(distancias.dist))
    else:
        diametro = INFINITO

    return EstadisticasGrafo(grafo.grados(), diametro, conexo)


def ventana_grados(n, p):
    """
    Degree concentration window (np - n^(3/4), np + n^(3/4)).

    Args:
        n (int): Number of vertices
        p (float): Edge probability

    Returns:
        tuple: (lower, upper) open bounds
    """
    radio = n ** 0.75
    return n * p - radio, n * p + radio


def grados_en_ventana(estadisticas, n, p):
    """
    Check that every degree lies strictly inside the concentration window.

    Args:
        estadisticas (EstadisticasGrafo): Statistics of a G(n, p) sample
        n (int): Number of vertices
        p (float): Edge probability

    Returns:
        bool: True if lower < delta <= Delta < upper
    """
    inferior, superior = ventana_grados(n, p)
    return inferior < estadisticas.grado_minimo and estadisticas.grado_maximo < superior
