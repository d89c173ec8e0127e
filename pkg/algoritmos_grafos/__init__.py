"""
Graph Algorithms Package - Graph Energy Toolkit

This package contains the graph-side algorithms of the toolkit: sampling
random graphs, measuring them, and moving them in and out of text files.

Modules:
    - generacion: Seeded G(n, p) sampler (PCG64, lexicographic pair order)
    - busqueda_anchura: All-pairs breadth-first search (level-synchronous)
    - estadisticas: Degrees, diameter, connectivity, degree window
    - lista_aristas: "n m" edge-list reader and writer

Usage:
    from algoritmos_grafos import generar_gnp, bfs_todos_los_pares

    grafo = generar_gnp(400, 0.5, semilla=7)
    distancias = bfs_todos_los_pares(grafo)
"""

from algoritmos_grafos.generacion import generar_gnp
from algoritmos_grafos.busqueda_anchura import bfs_todos_los_pares
from algoritmos_grafos.estadisticas import (
    estadisticas_grafo,
    grados_en_ventana,
    ventana_grados
)
from algoritmos_grafos.lista_aristas import (
    escribir_lista_aristas,
    leer_lista_aristas
)

__all__ = [
    'generar_gnp',
    'bfs_todos_los_pares',
    'estadisticas_grafo',
    'grados_en_ventana',
    'ventana_grados',
    'escribir_lista_aristas',
    'leer_lista_aristas'
]

__version__ = '1.0.0'
