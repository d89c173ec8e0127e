"""
Matriz Model - Graph Energy Toolkit

Dense real symmetric matrices built from a graph and a weight function,
and the weighted mean that replaces the average degree in the weighted
Laplacian energy.

Classes:
    MatrizSimetrica: Read-only dense symmetric matrix tagged with its kind
    MediaPonderada: (sum over i != j of f(D(i,j), d_i, d_j)) / n

Constants:
    TIPOS_MATRIZ: Accepted matrix kinds
"""

import numpy as np

from utils.excepciones import ParametroInvalidoError


TIPOS_MATRIZ = (
    "W_f", "A_f", "L_f", "L_f_plus",
    "A", "L", "L_plus",
    "L_1", "L_2", "L_1_plus", "L_2_plus",
    "general",
)

# Kinds whose diagonal is zero by construction
TIPOS_DIAGONAL_CERO = ("W_f", "A_f", "A")


class MatrizSimetrica:
    """
    Dense real symmetric n x n matrix.

    Entries are stored as a read-only float64 array. Builders produce exact
    symmetry; arbitrary input (tests, oracles) is checked by the
    eigensolver, not here.

    Attributes:
        entradas (numpy.ndarray): n x n entries
        tipo (str): One of TIPOS_MATRIZ
        peso (str or None): Name of the weight the matrix was built from
    """

    __slots__ = ("entradas", "tipo", "peso")

    def __init__(self, entradas, tipo="general", peso=None):
        """
        Initialize a new MatrizSimetrica instance.

        Args:
            entradas (array-like): Square matrix
            tipo (str, optional): Matrix kind. Defaults to "general".
            peso (str, optional): Weight name. Defaults to None.

        Raises:
            ParametroInvalidoError: If the input is not square or the kind is unknown
        """
        matriz = np.array(entradas, dtype=np.float64)
        if matriz.ndim != 2 or matriz.shape[0] != matriz.shape[1]:
            raise ParametroInvalidoError(f"Expected a square matrix, got shape {matriz.shape}")
        if tipo not in TIPOS_MATRIZ:
            raise ParametroInvalidoError(f"Unknown matrix kind {tipo!r}")

        matriz.setflags(write=False)
        self.entradas = matriz
        self.tipo = tipo
        self.peso = peso

    @property
    def n(self):
        """int: Dimension."""
        return self.entradas.shape[0]

    def traza(self):
        """float: Sum of the diagonal."""
        return float(np.trace(self.entradas))

    def norma_frobenius(self):
        """float: Frobenius norm."""
        return float(np.linalg.norm(self.entradas))

    def asimetria(self):
        """float: Frobenius norm of M - M^T."""
        return float(np.linalg.norm(self.entradas - self.entradas.T))

    def sumas_filas(self):
        """numpy.ndarray: Row sums."""
        return self.entradas.sum(axis=1)

    def forma_cuadratica(self, x):
        """
        Evaluate x^T M x.

        Args:
            x (array-like): Vector of length n

        Returns:
            float: Quadratic form value
        """
        x = np.asarray(x, dtype=np.float64)
        return float(x @ self.entradas @ x)

    def __add__(self, other):
        if not isinstance(other, MatrizSimetrica):
            return NotImplemented
        return MatrizSimetrica(self.entradas + other.entradas, "general", self.peso)

    def __repr__(self):
        return f"MatrizSimetrica(tipo={self.tipo}, n={self.n}, peso={self.peso})"


class MediaPonderada:
    """
    Weighted mean (sum over i != j of f(D(i,j), d_i, d_j)) / n.

    For the unweighted indicator this is the average degree 2m/n.

    Attributes:
        valor (float): Mean value
    """

    __slots__ = ("valor",)

    def __init__(self, valor):
        self.valor = float(valor)

    def __float__(self):
        return self.valor

    def __eq__(self, other):
        if isinstance(other, MediaPonderada):
            return self.valor == other.valor
        return NotImplemented

    def __hash__(self):
        return hash(self.valor)

    def __repr__(self):
        return f"MediaPonderada({self.valor!r})"
