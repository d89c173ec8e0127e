"""
Matrix Builders - Graph Energy Toolkit

Builds every matrix the energies are defined on:

    W_f       weighted distance matrix, f(D(i,j), d_i, d_j) off the diagonal
    A_f       W_f restricted to adjacent pairs
    L_f       D_f - W_f, with D_f the diagonal of row sums of W_f
    L_f_plus  D_f + W_f
    A, L, L+  the classical adjacency, Laplacian and signless Laplacian

plus the decomposition L_f = L_1 + L_2 that separates the adjacency part
(weights f(1) - f(2) on edges) from the complete-graph part (weights f(2)
on every pair). The identity holds whenever the diameter is at most 2.

All weights are evaluated on the upper triangle in one vectorized call.
"""

import logging
import math

import numpy as np

from models.matriz import MatrizSimetrica, MediaPonderada
from pesos.funcion_peso import ContextoPeso
from utils.excepciones import ParametroInvalidoError

logger = logging.getLogger("GraphEnergy.matrices")


def contexto_para(grafo, distancias):
    """
    Weight context of a sampled graph.

    Args:
        grafo (Grafo): Graph
        distancias (TablaDistancias): Its distance table

    Returns:
        ContextoPeso: n and the actual diameter (INFINITO when disconnected)
    """
    if distancias.es_conexo():
        diametro = int(distancias.dist.max()) if grafo.n > 1 else 0
    else:
        diametro = math.inf
    return ContextoPeso(n=grafo.n, diametro=diametro)


def _simetrizar(n, filas, columnas, valores):
    matriz = np.zeros((n, n))
    matriz[filas, columnas] = valores
    matriz[columnas, filas] = valores
    return matriz


def construir_distancia_ponderada(grafo, distancias, peso, ctx=None):
    """
    Weighted distance matrix W_f.

    Args:
        grafo (Grafo): Graph
        distancias (TablaDistancias): Distances of the same graph
        peso (FuncionPeso): Weight function
        ctx (ContextoPeso, optional): Context; derived from the graph when omitted

    Returns:
        MatrizSimetrica: Kind "W_f", zero diagonal

    Raises:
        DesconexionError: Disconnected graph with a distance-dependent weight

    Example:
        >>> from models.grafo import Grafo
        >>> from algoritmos_grafos import bfs_todos_los_pares
        >>> from pesos import obtener_peso
        >>> g = Grafo(3, [(0, 1), (1, 2)])
        >>> W = construir_distancia_ponderada(g, bfs_todos_los_pares(g), obtener_peso("harary"))
        >>> float(W.entradas[0, 2])
        0.5
    """
    ctx = ctx or contexto_para(grafo, distancias)
    n = grafo.n
    grados = grafo.grados().astype(np.float64)
    filas, columnas = np.triu_indices(n, k=1)

    valores = peso.evaluar(distancias.dist[filas, columnas], grados[filas], grados[columnas], ctx)
    logger.debug("W_f built for %s on n=%d", peso.nombre, n)
    return MatrizSimetrica(_simetrizar(n, filas, columnas, valores), "W_f", peso.nombre)


def construir_adyacencia_ponderada(grafo, distancias, peso, ctx=None):
    """
    Weighted adjacency matrix A_f: f(1, d_i, d_j) on edges, 0 elsewhere.

    For degree-based weights A_f equals W_f.

    Args:
        grafo (Grafo): Graph
        distancias (TablaDistancias): Distances of the same graph
        peso (FuncionPeso): Weight function
        ctx (ContextoPeso, optional): Context; derived from the graph when omitted

    Returns:
        MatrizSimetrica: Kind "A_f"
    """
    ctx = ctx or contexto_para(grafo, distancias)
    n = grafo.n
    grados = grafo.grados().astype(np.float64)
    if grafo.m == 0:
        return MatrizSimetrica(np.zeros((n, n)), "A_f", peso.nombre)

    filas, columnas = np.array(grafo.aristas).T
    valores = peso.evaluar(np.ones(filas.size), grados[filas], grados[columnas], ctx)
    return MatrizSimetrica(_simetrizar(n, filas, columnas, valores), "A_f", peso.nombre)


def construir_familia_laplaciana(W):
    """
    Weighted Laplacian, signless Laplacian and weighted mean of W.

    Args:
        W (MatrizSimetrica): Weighted matrix with zero diagonal

    Returns:
        tuple: (L_f, L_f_plus, MediaPonderada)

    Raises:
        ParametroInvalidoError: If W has a nonzero diagonal

    Example:
        >>> L, Lp, media = construir_familia_laplaciana(MatrizSimetrica(np.ones((3, 3)) - np.eye(3)))
        >>> media.valor
        2.0
    """
    if np.any(np.diag(W.entradas) != 0):
        raise ParametroInvalidoError("The weighted matrix must have a zero diagonal")

    grados_ponderados = W.entradas.sum(axis=1)
    D_f = np.diag(grados_ponderados)
    n = W.n
    media = MediaPonderada(grados_ponderados.sum() / n if n else 0.0)

    L_f = MatrizSimetrica(D_f - W.entradas, "L_f", W.peso)
    L_f_plus = MatrizSimetrica(D_f + W.entradas, "L_f_plus", W.peso)
    return L_f, L_f_plus, media


def construir_no_ponderadas(grafo):
    """
    Classical adjacency, Laplacian and signless Laplacian.

    Args:
        grafo (Grafo): Graph

    Returns:
        tuple: (A, L, L_plus) as MatrizSimetrica
    """
    A = grafo.matriz_adyacencia.astype(np.float64)
    D = np.diag(A.sum(axis=1))
    return (
        MatrizSimetrica(A, "A", "unweighted"),
        MatrizSimetrica(D - A, "L", "unweighted"),
        MatrizSimetrica(D + A, "L_plus", "unweighted"),
    )


def _laplaciano_de(pesos_aristas, sin_signo):
    diagonal = np.diag(pesos_aristas.sum(axis=1))
    return diagonal + pesos_aristas if sin_signo else diagonal - pesos_aristas


def descomponer_laplaciano(grafo, distancias, peso, ctx=None, sin_signo=False):
    """
    Split L_f into an adjacency part and a complete-graph part.

    L_1 is the Laplacian of the weights f(1, d_i, d_j) - f(2, d_i, d_j) on
    the edges and L_2 the Laplacian of the weights f(2, d_i, d_j) on every
    pair. With sin_signo=True the signless analogues are returned. On a
    graph of diameter at most 2, L_1 + L_2 equals L_f (resp. L_f_plus).

    Args:
        grafo (Grafo): Graph
        distancias (TablaDistancias): Distances of the same graph
        peso (FuncionPeso): Weight function
        ctx (ContextoPeso, optional): Context; derived from the graph when omitted
        sin_signo (bool, optional): Signless decomposition. Defaults to False.

    Returns:
        tuple: (L_1, L_2) as MatrizSimetrica
    """
    ctx = ctx or contexto_para(grafo, distancias)
    n = grafo.n
    grados = grafo.grados().astype(np.float64)
    filas, columnas = np.triu_indices(n, k=1)

    f2 = peso.evaluar(np.full(filas.size, 2.0), grados[filas], grados[columnas], ctx)
    completo = _simetrizar(n, filas, columnas, f2)

    adyacente = np.zeros((n, n))
    if grafo.m:
        ai, aj = np.array(grafo.aristas).T
        f1 = peso.evaluar(np.ones(ai.size), grados[ai], grados[aj], ctx)
        f2_aristas = completo[ai, aj]
        adyacente = _simetrizar(n, ai, aj, f1 - f2_aristas)

    sufijo = "_plus" if sin_signo else ""
    return (
        MatrizSimetrica(_laplaciano_de(adyacente, sin_signo), f"L_1{sufijo}", peso.nombre),
        MatrizSimetrica(_laplaciano_de(completo, sin_signo), f"L_2{sufijo}", peso.nombre),
    )


def laplaciano_completo(n):
    """
    Laplacian of K_n: spectrum n (multiplicity n - 1) and 0.

    Args:
        n (int): Order

    Returns:
        MatrizSimetrica: n I - J
    """
    return MatrizSimetrica(n * np.eye(n) - np.ones((n, n)), "L", "unweighted")


def laplaciano_sin_signo_completo(n):
    """
    Signless Laplacian of K_n: spectrum n - 2 (multiplicity n - 1) and 2n - 2.

    Args:
        n (int): Order

    Returns:
        MatrizSimetrica: (n - 2) I + J
    """
    return MatrizSimetrica((n - 2) * np.eye(n) + np.ones((n, n)), "L_plus", "unweighted")


# CLI names of the matrices accepted by `spectrum` and `esd`
NOMBRES_MATRIZ = ("A", "L", "L+", "Wf", "Af", "Lf", "Lf+")


def construir_por_nombre(nombre, grafo, distancias, peso):
    """
    Build a matrix from its command-line name.

    Args:
        nombre (str): One of NOMBRES_MATRIZ
        grafo (Grafo): Graph
        distancias (TablaDistancias): Distances of the same graph
        peso (FuncionPeso): Weight used by the weighted kinds

    Returns:
        MatrizSimetrica: The requested matrix

    Raises:
        ParametroInvalidoError: Unknown name
    """
    if nombre in ("A", "L", "L+"):
        A, L, L_plus = construir_no_ponderadas(grafo)
        return {"A": A, "L": L, "L+": L_plus}[nombre]
    if nombre == "Af":
        return construir_adyacencia_ponderada(grafo, distancias, peso)
    if nombre in ("Wf", "Lf", "Lf+"):
        W = construir_distancia_ponderada(grafo, distancias, peso)
        if nombre == "Wf":
            return W
        L_f, L_f_plus, _ = construir_familia_laplaciana(W)
        return L_f if nombre == "Lf" else L_f_plus
    raise ParametroInvalidoError(
        f"Unknown matrix {nombre!r}; valid: {', '.join(NOMBRES_MATRIZ)}"
    )


def volcar_matriz(matriz):
    """
    Plain-text dump: one line per row, space-separated repr floats.

    Args:
        matriz (MatrizSimetrica): Matrix

    Returns:
        str: Text ending with a newline (empty for n = 0)
    """
    return "".join(
        " ".join(repr(float(x)) for x in fila) + "\n" for fila in matriz.entradas
    )
