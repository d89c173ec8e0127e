"""
Energy Functionals - Graph Energy Toolkit

The five energies are functionals of three spectra:

    E(W_f)   = sum |rho_i|                 rho = eigenvalues of W_f
    LE_f     = sum |lambda_i - mean|       lambda = eigenvalues of L_f
    LE+_f    = sum |mu_i - mean|           mu = eigenvalues of L_f_plus
    LEL_f    = sum sqrt|lambda_i|
    IE_f     = sum sqrt|mu_i|

mean is the weighted mean (sum of all off-diagonal weights) / n. The
incidence energy goes through the signless Laplacian, so no incidence
matrix is ever formed.
"""

import logging

import numpy as np

from algoritmos_grafos.busqueda_anchura import bfs_todos_los_pares
from algoritmos_espectrales.matrices import (
    construir_distancia_ponderada,
    construir_familia_laplaciana,
    contexto_para,
)
from algoritmos_espectrales.valores_propios import valores_propios_simetricos
from config import TOL_RECORTE_NEGATIVO
from models.reportes import ReporteEnergia

logger = logging.getLogger("GraphEnergy.energias")


def energia(espectro):
    """
    Energy: sum of |lambda_i|.

    Example:
        >>> from algoritmos_espectrales.valores_propios import espectro_desde_valores
        >>> energia(espectro_desde_valores([2, -1, -1]))
        4.0
    """
    return float(np.abs(espectro.valores).sum())


def energia_laplaciana(espectro, media):
    """
    Laplacian-type energy: sum of |lambda_i - mean|.

    Args:
        espectro (Espectro): Spectrum of L_f or L_f_plus
        media (MediaPonderada or float): Weighted mean of the same graph

    Returns:
        float: Energy
    """
    return float(np.abs(espectro.valores - float(media)).sum())


def recortar_negativos(espectro):
    """
    Eigenvalues with rounding-level negatives set to 0.

    Values in [-1e-9 ||M||_F, 0) are clamped; ||M||_F is recovered from the
    spectrum as sqrt(sum lambda_i^2). Larger negatives are kept.

    Args:
        espectro (Espectro): Spectrum

    Returns:
        numpy.ndarray: Clamped copy of the eigenvalues
    """
    valores = espectro.valores.copy()
    umbral = TOL_RECORTE_NEGATIVO * np.sqrt(np.dot(valores, valores))
    valores[(valores < 0) & (valores >= -umbral)] = 0.0
    return valores


def lel(espectro):
    """
    Square-root energy: sum of sqrt|lambda_i|.

    Applied to L_f it gives LEL_f, applied to L_f_plus it gives IE_f.

    Example:
        >>> from algoritmos_espectrales.valores_propios import espectro_desde_valores
        >>> lel(espectro_desde_valores([4, 1, 1]))
        4.0
    """
    return float(np.sqrt(np.abs(recortar_negativos(espectro))).sum())


def espectros_ponderados(grafo, distancias, peso, ctx=None, meta=None):
    """
    Spectra of W_f, L_f and L_f_plus plus the weighted mean.

    Args:
        grafo (Grafo): Graph
        distancias (TablaDistancias): Distances of the same graph
        peso (FuncionPeso): Weight
        ctx (ContextoPeso, optional): Context; derived from the graph when omitted
        meta (dict, optional): Provenance attached to each spectrum

    Returns:
        tuple: (Espectro of W_f, Espectro of L_f, Espectro of L_f_plus, MediaPonderada)
    """
    ctx = ctx or contexto_para(grafo, distancias)
    W = construir_distancia_ponderada(grafo, distancias, peso, ctx)
    L_f, L_f_plus, media = construir_familia_laplaciana(W)
    return (
        valores_propios_simetricos(W, meta),
        valores_propios_simetricos(L_f, meta),
        valores_propios_simetricos(L_f_plus, meta),
        media,
    )


def reporte_desde_espectros(espectro_W, espectro_L, espectro_L_plus, media, meta=None):
    """
    Fill an energy report from already computed spectra.

    Returns:
        ReporteEnergia: The five energies and the weighted mean
    """
    return ReporteEnergia(
        graph_energy=energia(espectro_W),
        laplacian_energy=energia_laplaciana(espectro_L, media),
        signless_laplacian_energy=energia_laplaciana(espectro_L_plus, media),
        lel=lel(espectro_L),
        ie=lel(espectro_L_plus),
        weighted_mean=float(media),
        meta=meta,
    )


def reporte_completo(grafo, peso, ctx=None, distancias=None, meta=None):
    """
    All five energies of a weighted graph.

    Args:
        grafo (Grafo): Graph
        peso (FuncionPeso): Weight
        ctx (ContextoPeso, optional): Context; derived from the graph when omitted
        distancias (TablaDistancias, optional): Precomputed distances
        meta (dict, optional): Extra provenance for the report

    Returns:
        ReporteEnergia: Energies of W_f, L_f and L_f_plus

    Raises:
        DesconexionError: Disconnected graph with a distance-dependent weight
    """
    if distancias is None:
        distancias = bfs_todos_los_pares(grafo)
    ctx = ctx or contexto_para(grafo, distancias)
    datos = {"weight": peso.nombre, "n": grafo.n, "m": grafo.m, "diameter": ctx.diametro}
    datos.update(meta or {})

    espectros = espectros_ponderados(grafo, distancias, peso, ctx)
    reporte = reporte_desde_espectros(*espectros, meta=datos)
    logger.debug("energies of %s on n=%d: %r", peso.nombre, grafo.n, reporte)
    return reporte
