"""
Symmetric Eigensolver and Spectrum Statistics - Graph Energy Toolkit

Eigenvalues come from LAPACK's symmetric driver through
scipy.linalg.eigvalsh (tridiagonal reduction followed by an implicit
shifted iteration); eigenvectors are never formed. Results are returned
as Espectro objects sorted in descending order.

Functions:
    valores_propios_simetricos: All eigenvalues of a symmetric matrix
    espectro_desde_valores: Wrap precomputed values as a spectrum
    radio_espectral: max |lambda_i|
    fraccion_bulto: Fraction of eigenvalues near a predicted location
    histograma_esd: Histogram of the scaled empirical spectral distribution
    cotas_weyl: Per-eigenvalue bounds for a sum of symmetric matrices
    radio_centrado_laplaciano: Diagnostic on the centred Laplacian
    radio_sin_perron: Largest non-Perron adjacency eigenvalue
"""

import logging
import math

import numpy as np
from scipy import linalg

from algoritmos_espectrales.matrices import construir_no_ponderadas
from config import MAX_EXTREMOS, TOL_SIMETRIA
from models.espectro import Espectro, HistogramaESD
from models.matriz import MatrizSimetrica
from utils.excepciones import MatrizNoSimetricaError, ParametroInvalidoError

logger = logging.getLogger("GraphEnergy.espectral")

ESCALAS = ("none", "sqrt_n", "n", "wigner")


def valores_propios_simetricos(matriz, meta=None):
    """
    All eigenvalues of a real symmetric matrix.

    Args:
        matriz (MatrizSimetrica or array-like): Input matrix
        meta (dict, optional): Provenance stored in the spectrum

    Returns:
        Espectro: n eigenvalues, largest first

    Raises:
        MatrizNoSimetricaError: If ||M - M^T||_F > 1e-12 ||M||_F

    Example:
        >>> valores_propios_simetricos([[2.0, 1.0], [1.0, 2.0]]).valores.tolist()
        [3.0, 1.0]
    """
    if not isinstance(matriz, MatrizSimetrica):
        matriz = MatrizSimetrica(matriz)

    M = matriz.entradas
    if matriz.n == 0:
        return Espectro([], matriz.tipo, meta)

    asimetria = matriz.asimetria()
    if asimetria > TOL_SIMETRIA * matriz.norma_frobenius():
        raise MatrizNoSimetricaError(
            f"Matrix {matriz.tipo} is not symmetric (||M - M^T||_F = {asimetria:.3e})"
        )

    valores = linalg.eigvalsh((M + M.T) / 2, check_finite=True)
    return Espectro(valores, matriz.tipo, meta)


def espectro_desde_valores(valores, tipo="general", meta=None):
    """
    Spectrum from values that did not come out of the eigensolver.

    Args:
        valores (array-like): Eigenvalues in any order
        tipo (str, optional): Source kind. Defaults to "general".
        meta (dict, optional): Provenance

    Returns:
        Espectro: Sorted spectrum
    """
    return Espectro(valores, tipo, meta)


def radio_espectral(espectro):
    """
    Spectral radius max |lambda_i|.

    Raises:
        EspectroVacioError: On an empty spectrum
    """
    espectro.exigir_no_vacio()
    return float(np.max(np.abs(espectro.valores)))


def _conservados(valores, centro, excluir):
    """Drop outliers: (arriba, abajo) positionally, or an int k farthest from center."""
    n = valores.size
    if isinstance(excluir, tuple):
        arriba, abajo = (int(x) for x in excluir)
        if arriba < 0 or abajo < 0:
            raise ParametroInvalidoError("Excluded counts must be nonnegative")
        if arriba + abajo > MAX_EXTREMOS:
            raise ParametroInvalidoError(f"At most {MAX_EXTREMOS} outliers may be excluded")
        if arriba + abajo >= n:
            raise ParametroInvalidoError(f"Cannot exclude {arriba + abajo} of {n} eigenvalues")
        return valores[arriba:n - abajo]

    k = int(excluir)
    if k < 0:
        raise ParametroInvalidoError("Excluded count must be nonnegative")
    if k > MAX_EXTREMOS:
        raise ParametroInvalidoError(f"At most {MAX_EXTREMOS} outliers may be excluded")
    if k >= n:
        raise ParametroInvalidoError(f"Cannot exclude {k} of {n} eigenvalues")
    if k == 0:
        return valores
    orden = np.argsort(-np.abs(valores - centro), kind="stable")
    return np.delete(valores, orden[:k])


def fraccion_bulto(espectro, centro, tol, excluir_extremos=0):
    """
    Fraction of eigenvalues within tol * |center| of center.

    Args:
        espectro (Espectro): Spectrum
        centro (float): Predicted bulk location
        tol (float): Relative half-width (> 0)
        excluir_extremos (int or tuple): Either (arriba, abajo), dropping that
            many largest and smallest eigenvalues, or an int k dropping the
            k eigenvalues farthest from center

    Returns:
        float: Fraction in [0, 1] of the remaining eigenvalues

    Raises:
        ParametroInvalidoError: tol <= 0, or as many exclusions as eigenvalues

    Example:
        >>> fraccion_bulto(espectro_desde_valores([100, 50, 0]), 50, 0.01)
        0.3333333333333333
    """
    if not tol > 0:
        raise ParametroInvalidoError(f"Bulk tolerance must be positive, got {tol}")

    restantes = _conservados(espectro.valores, centro, excluir_extremos)
    dentro = np.abs(restantes - centro) <= tol * abs(centro)
    return float(np.count_nonzero(dentro) / restantes.size)


def histograma_esd(espectro, bins, escala="none", p=None, rango=None, descartar_mayores=0):
    """
    Histogram of the scaled empirical spectral distribution.

    Scalings:
        none    the eigenvalues themselves
        sqrt_n  lambda / sqrt(n)
        n       lambda / n
        wigner  (lambda + p) / sqrt(p (1 - p) n), the semicircle scaling of an
                adjacency spectrum (support close to [-2, 2] once the Perron
                eigenvalue is discarded)

    Args:
        espectro (Espectro): Spectrum
        bins (int): Number of bins (>= 1)
        escala (str, optional): One of ESCALAS. Defaults to "none".
        p (float, optional): Edge probability, required by "wigner"
        rango (tuple, optional): (low, high) of the bins; defaults to the
            range of the scaled values, so every eigenvalue is counted
        descartar_mayores (int, optional): Largest eigenvalues left out
            (1 drops the Perron root). Defaults to 0.

    Counts sum to n only with the defaults. Dropped eigenvalues and values
    outside an explicit `rango` are not counted, so the sum is then smaller.

    Returns:
        HistogramaESD: Edges and counts

    Example:
        >>> histograma_esd(espectro_desde_valores([0, 1, 2, 3]), 2).conteos.tolist()
        [2, 2]
    """
    if isinstance(bins, bool) or int(bins) != bins or bins < 1:
        raise ParametroInvalidoError(f"bins must be a positive integer, got {bins}")
    if escala not in ESCALAS:
        raise ParametroInvalidoError(f"Unknown scaling {escala!r}; valid: {', '.join(ESCALAS)}")

    n = espectro.n
    valores = espectro.valores[int(descartar_mayores):]

    if escala == "sqrt_n":
        valores = valores / math.sqrt(n)
    elif escala == "n":
        valores = valores / n
    elif escala == "wigner":
        if p is None or not 0 < p < 1:
            raise ParametroInvalidoError("The wigner scaling needs p in (0, 1)")
        valores = (valores + p) / math.sqrt(p * (1 - p) * n)

    if rango is None:
        if valores.size == 0:
            rango = (0.0, 1.0)
        else:
            bajo, alto = float(valores.min()), float(valores.max())
            rango = (bajo - 0.5, alto + 0.5) if bajo == alto else (bajo, alto)

    conteos, bordes = np.histogram(valores, bins=int(bins), range=rango)
    return HistogramaESD(bordes, conteos, escala)


def cotas_weyl(espectro_H, espectro_P):
    """
    Weyl bounds for M = H + P.

    lambda_i(H) + lambda_min(P) <= lambda_i(M) <= lambda_i(H) + lambda_max(P)

    Args:
        espectro_H (Espectro): Spectrum of H
        espectro_P (Espectro): Spectrum of P

    Returns:
        tuple: (lower, upper) arrays aligned with the descending order
    """
    return espectro_H.valores + espectro_P.minimo, espectro_H.valores + espectro_P.maximo


def radio_centrado_laplaciano(grafo, p):
    """
    Spectral radius of (p(1-p))^(-1/2) (L + pJ - npI) against sqrt(2 n log n).

    Logged as a diagnostic only; the two values agree to leading order.

    Args:
        grafo (Grafo): Sample of G(n, p)
        p (float): Edge probability in (0, 1)

    Returns:
        tuple: (radius, sqrt(2 n log n))
    """
    n = grafo.n
    _, L, _ = construir_no_ponderadas(grafo)
    centrada = (L.entradas + p * np.ones((n, n)) - n * p * np.eye(n)) / math.sqrt(p * (1 - p))
    radio = radio_espectral(valores_propios_simetricos(centrada))
    referencia = math.sqrt(2 * n * math.log(n))
    logger.debug("centred Laplacian radius %.4f vs sqrt(2 n log n) = %.4f (ratio %.4f)",
                 radio, referencia, radio / referencia)
    return radio, referencia


def radio_sin_perron(espectro_A):
    """
    Largest |lambda_i| of an adjacency spectrum once the Perron root is dropped.

    It grows like sqrt(n); logged as a diagnostic.

    Args:
        espectro_A (Espectro): Adjacency spectrum

    Returns:
        float: max over i >= 2 of |lambda_i|
    """
    if espectro_A.n < 2:
        return 0.0
    radio = float(np.max(np.abs(espectro_A.valores[1:])))
    logger.debug("non-Perron adjacency radius / sqrt(n) = %.4f", radio / math.sqrt(espectro_A.n))
    return radio
