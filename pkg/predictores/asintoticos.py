"""
Asymptotic Predictors - Graph Energy Toolkit

Every leading-order formula for the energies of G(n, p) evaluated at a
finite n by substituting the expected degree np. The o(1) terms are not
modelled here; they are absorbed by the tolerance used when predictions
are compared with measurements.

    LEL_f, IE_f   sqrt|f1| sqrt(p) n^(3/2)                 f1/f2 -> infinity
                  sqrt|f2| sqrt|1 + (C - 1) p| n^(3/2)     f1/f2 -> C
    LE_f          |D1 - D2| [2 sqrt(2)/3, sqrt(2)] sqrt(p(1-p)) n^(3/2)
    LE+_f         |D1 - D2| [16/(3 pi) -+ sqrt(2)] sqrt(p(1-p)) n^(3/2)
    E(W_f)        |f1 - f2| 8/(3 pi) sqrt(p(1-p)) n^(3/2)   (C != 1)
    E(A_f)        |f1| 8/(3 pi) sqrt(p(1-p)) n^(3/2)        (degree-only f)
    bulk of L_f   (f1 - f2) p n + f2 n

where f1 = f(1, np, np), f2 = f(2, np, np), D1 = f1 and D2 = f2.
"""

import logging
import math

import numpy as np

from models.reportes import Prediccion
from pesos.registro_pesos import par_asintotico, validar_n_p
from utils.excepciones import ParametroInvalidoError, PesoNoAplicableError

logger = logging.getLogger("GraphEnergy.predictores")

COEF_SEMICIRCULO = 8 / (3 * math.pi)
COEF_LE_INFERIOR = 2 * math.sqrt(2) / 3
COEF_LE_SUPERIOR = math.sqrt(2)
COEF_LE_PLUS_CENTRO = 16 / (3 * math.pi)

FUENTE_LEL_IE = "lel-ie-limit-class"
FUENTE_LE = "le-distance-bracket"
FUENTE_E_WF = "energy-weighted-distance"
FUENTE_E_ADJ = "energy-weighted-adjacency"
FUENTE_LEL_ADJ = "lel-weighted-adjacency"


def _escala(n, p):
    """sqrt(p(1-p)) n^(3/2)."""
    return math.sqrt(p * (1 - p)) * n ** 1.5


def predecir_lel_ie(peso, n, p, cantidad="LEL_f"):
    """
    Leading term of LEL_f (and of IE_f, which has the same one).

    Args:
        peso (FuncionPeso): Weight
        n (int): Vertex count (>= 2)
        p (float): Edge probability in (0, 1)
        cantidad (str, optional): "LEL_f" or "IE_f". Defaults to "LEL_f".

    Returns:
        Prediccion: Point prediction

    Raises:
        ProbabilidadInvalidaError: p outside (0, 1)

    Example:
        >>> from pesos import obtener_peso
        >>> round(predecir_lel_ie(obtener_peso("harary"), 1000, 0.5).valor, 2)
        27386.13
    """
    f1, f2 = par_asintotico(peso, n, p)
    clase = peso.clase_limite
    if clase.finita:
        valor = math.sqrt(abs(f2)) * math.sqrt(abs(1 + (clase.C - 1) * p)) * n ** 1.5
    else:
        valor = math.sqrt(abs(f1)) * math.sqrt(p) * n ** 1.5
    return Prediccion(cantidad, valor=valor, fuente=FUENTE_LEL_IE)


def predecir_lel_adyacencia(peso, n, p, cantidad="LEL_f"):
    """
    LEL_f of a weight that vanishes beyond adjacency: sqrt|f(np, np)| sqrt(p) n^(3/2).

    Raises:
        PesoNoAplicableError: If the weight is nonzero at distance >= 2
    """
    if not peso.solo_adyacencia:
        raise PesoNoAplicableError(f"{peso.nombre} is not a degree-only weight")
    f1, _ = par_asintotico(peso, n, p)
    return Prediccion(cantidad, valor=math.sqrt(abs(f1)) * math.sqrt(p) * n ** 1.5,
                      fuente=FUENTE_LEL_ADJ)


def predecir_intervalo_le(peso, n, p, cantidad="LE_f"):
    """
    Bracket of LE_f or LE+_f for distance-only weights.

    The signless lower coefficient 16/(3 pi) - sqrt(2) is positive; a
    negative endpoint would be floored at 0.

    Args:
        peso (FuncionPeso): Weight
        n (int): Vertex count (>= 2)
        p (float): Edge probability in (0, 1)
        cantidad (str, optional): "LE_f" or "LE_plus_f". Defaults to "LE_f".

    Returns:
        Prediccion: Bracket, or INDETERMINATE when f depends on the degrees
    """
    if cantidad not in ("LE_f", "LE_plus_f"):
        raise ParametroInvalidoError(f"No Laplacian-energy bracket for {cantidad}")
    validar_n_p(n, p)
    if not peso.solo_distancia:
        return Prediccion.indeterminada(
            cantidad, FUENTE_LE,
            f"{peso.nombre} depends on the degrees; the bracket needs constant D1, D2",
        )

    D1, D2 = par_asintotico(peso, n, p)
    factor = abs(D1 - D2) * _escala(n, p)
    if cantidad == "LE_f":
        inferior, superior = COEF_LE_INFERIOR * factor, COEF_LE_SUPERIOR * factor
    else:
        inferior = max(0.0, (COEF_LE_PLUS_CENTRO - math.sqrt(2)) * factor)
        superior = (COEF_LE_PLUS_CENTRO + math.sqrt(2)) * factor
    return Prediccion(cantidad, intervalo=(inferior, superior), fuente=FUENTE_LE)


def predecir_energia_wf(peso, n, p):
    """
    E(W_f) = |f1 - f2| 8/(3 pi) sqrt(p(1-p)) n^(3/2).

    Returns:
        Prediccion: Point prediction, INDETERMINATE when f1/f2 -> 1

    Example:
        >>> from pesos import obtener_peso
        >>> round(predecir_energia_wf(obtener_peso("gutman"), 100, 0.5).valor)
        1061033
    """
    f1, f2 = par_asintotico(peso, n, p)
    if peso.clase_limite.finita and peso.clase_limite.C == 1:
        return Prediccion.indeterminada(
            "E_Wf", FUENTE_E_WF,
            "f(1, np, np) / f(2, np, np) -> 1; only o(|f2|) n^(3/2) is known",
        )
    return Prediccion("E_Wf", valor=abs(f1 - f2) * COEF_SEMICIRCULO * _escala(n, p),
                      fuente=FUENTE_E_WF)


def predecir_energia_adyacencia(peso, n, p):
    """
    E(A_f) = |f(np, np)| 8/(3 pi) sqrt(p(1-p)) n^(3/2) for degree-only weights.

    Raises:
        PesoNoAplicableError: If the weight depends on distances beyond adjacency

    Example:
        >>> from pesos import obtener_peso
        >>> round(predecir_energia_adyacencia(obtener_peso("randic"), 400, 0.5).valor, 2)
        16.98
    """
    if not peso.solo_adyacencia:
        raise PesoNoAplicableError(
            f"{peso.nombre} depends on distances beyond adjacency; "
            "the weighted-adjacency energy formula does not cover it"
        )
    f1, _ = par_asintotico(peso, n, p)
    return Prediccion("E_adj", valor=abs(f1) * COEF_SEMICIRCULO * _escala(n, p),
                      fuente=FUENTE_E_ADJ)


def predecir_bulto(peso, n, p):
    """
    Location of the eigenvalue bulk of L_f: (f1 - f2) p n + f2 n.

    Example:
        >>> from pesos import obtener_peso
        >>> predecir_bulto(obtener_peso("hyper_wiener"), 100, 0.5)
        200.0
    """
    f1, f2 = par_asintotico(peso, n, p)
    return (f1 - f2) * p * n + f2 * n


def clasificar_caso(peso, n, p, tipo="L_f"):
    """
    Case of the sign analysis of F = f1 - f2 and f2.

    Returns the case number and how many of the largest (arriba) and
    smallest (abajo) eigenvalues lie outside the bulk. The zero
    eigenvalue of L_f is counted as an outlier.

    L_f:       1: F >= 0, f2 >= 0 -> (0, 2)    2: F >= 0, f2 < 0 -> (1, 1)
               3: F < 0, f2 >= 0  -> (1, 1)    4: F < 0, f2 < 0  -> (1, 1)
    L_f_plus:  1: f2 >= 0 -> (2, 1)            2: f2 < 0 -> (1, 2)

    Args:
        peso (FuncionPeso): Weight
        n (int): Vertex count
        p (float): Edge probability
        tipo (str, optional): "L_f" or "L_f_plus". Defaults to "L_f".

    Returns:
        tuple: (case, arriba, abajo)
    """
    f1, f2 = par_asintotico(peso, n, p)
    F = f1 - f2
    if tipo == "L_f":
        if F >= 0:
            return (1, 0, 2) if f2 >= 0 else (2, 1, 1)
        return (3, 1, 1) if f2 >= 0 else (4, 1, 1)
    if tipo == "L_f_plus":
        return (1, 2, 1) if f2 >= 0 else (2, 1, 2)
    raise ParametroInvalidoError(f"Case analysis covers L_f and L_f_plus, not {tipo!r}")


def intervalo_weyl_distancia(espectro_L, D1, D2, n):
    """
    Weyl bounds on the spectrum of L_D = (D1 - D2) L + D2 L(K_n).

    This is L_f of a distance-only weight on a graph of diameter at most 2.
    Each bound comes from lambda_(i+j-1)(H + P) <= lambda_i(H) + lambda_j(P)
    and its mirror, with H = (D1 - D2) L and P = D2 L(K_n), whose spectrum
    is D2 n (n - 1 times) and 0.

    Args:
        espectro_L (Espectro): Spectrum of the unweighted Laplacian L
        D1 (float): Weight at distance 1
        D2 (float): Weight at distance 2
        n (int): Vertex count

    Returns:
        tuple: (lower, upper) arrays aligned with the descending order
    """
    H = np.sort((D1 - D2) * espectro_L.valores)[::-1]
    shift = D2 * n
    inferior = np.empty_like(H)
    superior = np.empty_like(H)
    if D2 >= 0:
        superior[:] = H + shift
        inferior[:-1] = H[1:] + shift
        inferior[-1] = H[-1]
    else:
        inferior[:] = H + shift
        superior[0] = H[0]
        superior[1:] = H[:-1] + shift
    return inferior, superior


def margen_conjetura(reporte):
    """
    LE_f - E(W_f); a positive margin means the Laplacian energy dominates.

    Args:
        reporte (ReporteEnergia): Energies of one weighted graph

    Returns:
        float: Margin
    """
    return reporte.laplacian_energy - reporte.graph_energy


def predecir(peso, n, p, cantidad):
    """
    Prediction of any quantity, INDETERMINATE where no formula applies.

    Args:
        peso (FuncionPeso): Weight
        n (int): Vertex count (>= 2)
        p (float): Edge probability in (0, 1)
        cantidad (str): One of E_adj, E_Wf, LE_f, LE_plus_f, LEL_f, IE_f

    Returns:
        Prediccion: The prediction

    Raises:
        ParametroInvalidoError: Unknown quantity
        DominioPesoError: Weight outside its real domain at np
    """
    if cantidad == "E_adj":
        try:
            return predecir_energia_adyacencia(peso, n, p)
        except PesoNoAplicableError as e:
            validar_n_p(n, p)
            return Prediccion.indeterminada(cantidad, FUENTE_E_ADJ, str(e))
    if cantidad == "E_Wf":
        return predecir_energia_wf(peso, n, p)
    if cantidad in ("LE_f", "LE_plus_f"):
        return predecir_intervalo_le(peso, n, p, cantidad)
    if cantidad in ("LEL_f", "IE_f"):
        return predecir_lel_ie(peso, n, p, cantidad)
    raise ParametroInvalidoError(f"Unknown quantity {cantidad!r}")


def fila_tabla(peso, n, p):
    """
    Table leading term against the LEL/IE predictor at (n, p).

    Args:
        peso (FuncionPeso): Weight
        n (int): Vertex count
        p (float): Edge probability

    Returns:
        dict: weight, formula, table term, prediction, relative difference, exact flag
    """
    prediccion = predecir_lel_ie(peso, n, p).valor
    tabla = peso.orden_tabla(n, p)
    return {
        "weight": peso.nombre,
        "formula": peso.descripcion,
        "limit_class": str(peso.clase_limite),
        "table_term": tabla,
        "predicted": prediccion,
        "relative_difference": abs(prediccion - tabla) / abs(tabla),
        "exact": peso.tabla_exacta,
    }
