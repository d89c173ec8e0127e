"""
Exact Oracles - Graph Energy Toolkit

Independent checks for the floating-point eigensolver on small integer
symmetric matrices, all in exact rational arithmetic:

    polinomio_caracteristico_entero   Faddeev-LeVerrier, integer coefficients
    contar_valores_menores            #eigenvalues < x from the inertia of M - xI
    certificar_espectro               every computed eigenvalue within delta of a
                                      true one, counted with multiplicity
"""

from fractions import Fraction

import numpy as np

from utils.excepciones import ParametroInvalidoError


def _como_enteros(matriz):
    entradas = np.asarray(matriz)
    if entradas.ndim != 2 or entradas.shape[0] != entradas.shape[1]:
        raise ParametroInvalidoError("Expected a square matrix")
    if not np.all(entradas == np.round(entradas)):
        raise ParametroInvalidoError("Exact oracles need integer entries")
    return [[int(x) for x in fila] for fila in entradas]


def polinomio_caracteristico_entero(matriz):
    """
    Coefficients of det(lambda I - M), highest degree first.

    Args:
        matriz (array-like): Integer square matrix

    Returns:
        list: n + 1 Python integers, leading coefficient 1

    Example:
        >>> polinomio_caracteristico_entero([[2, 1], [1, 2]])
        [1, -4, 3]
    """
    A = _como_enteros(matriz)
    n = len(A)
    coeficientes = [1]
    M = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_(k-1) + c_(n-k+1) I
        M = [
            [sum(A[i][t] * M[t][j] for t in range(n)) + (c if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        traza = sum(sum(A[i][t] * M[t][i] for t in range(n)) for i in range(n))
        c = -traza // k
        coeficientes.append(c)
    return coeficientes


def contar_valores_menores(matriz, x):
    """
    Number of eigenvalues strictly below x.

    Symmetric elimination of M - xI in rational arithmetic; by Sylvester's
    law of inertia the count of negative pivots is the count of
    eigenvalues below x.

    Args:
        matriz (array-like): Integer symmetric matrix
        x (float or Fraction): Threshold, not an integer

    Returns:
        int: Count

    Raises:
        ParametroInvalidoError: If a pivot vanishes (x is an eigenvalue of a
            leading submatrix)
    """
    A = _como_enteros(matriz)
    n = len(A)
    x = Fraction(x)
    B = [[Fraction(A[i][j]) - (x if i == j else 0) for j in range(n)] for i in range(n)]

    negativos = 0
    for k in range(n):
        pivote = B[k][k]
        if pivote == 0:
            raise ParametroInvalidoError(f"Zero pivot at step {k}; shift the threshold")
        if pivote < 0:
            negativos += 1
        for i in range(k + 1, n):
            factor = B[i][k] / pivote
            if factor:
                for j in range(k + 1, n):
                    B[i][j] -= factor * B[k][j]
    return negativos


def certificar_espectro(matriz, espectro, delta=1e-8):
    """
    Certify that each computed eigenvalue lies within delta of the true one.

    With the spectrum in ascending order nu_1 <= ... <= nu_n, the k-th true
    eigenvalue lies in [nu_k - delta, nu_k + delta] exactly when
    N(nu_k - delta) <= k - 1 and N(nu_k + delta) >= k, N counting
    eigenvalues below a threshold.

    Args:
        matriz (array-like): Integer symmetric matrix
        espectro (Espectro): Computed spectrum of the same matrix
        delta (float, optional): Accuracy to certify. Defaults to 1e-8.

    Returns:
        bool: True when every eigenvalue is certified
    """
    ascendentes = espectro.valores[::-1]
    for k, nu in enumerate(ascendentes):
        if contar_valores_menores(matriz, float(nu) - delta) > k:
            return False
        if contar_valores_menores(matriz, float(nu) + delta) < k + 1:
            return False
    return True


def raices_caracteristicas(matriz):
    """
    Roots of the exact characteristic polynomial, descending.

    Only reliable for well-separated eigenvalues; clustered roots are
    ill-conditioned and should go through certificar_espectro.

    Args:
        matriz (array-like): Integer symmetric matrix

    Returns:
        numpy.ndarray: Real parts of the roots, largest first
    """
    raices = np.roots(np.array(polinomio_caracteristico_entero(matriz), dtype=np.float64))
    return np.sort(raices.real)[::-1]
