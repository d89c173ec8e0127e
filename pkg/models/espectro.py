"""
Espectro Model - Graph Energy Toolkit

Classes:
    Espectro: Descending eigenvalues with provenance
    HistogramaESD: Histogram of the empirical spectral distribution
"""

import numpy as np

from utils.excepciones import EspectroVacioError, ParametroInvalidoError


class Espectro:
    """
    Real eigenvalues sorted in descending order.

    Attributes:
        valores (numpy.ndarray): Read-only eigenvalues, largest first
        tipo (str): Kind of the source matrix
        meta (dict): Provenance (n, p, weight, seed) when known
    """

    __slots__ = ("valores", "tipo", "meta")

    def __init__(self, valores, tipo="general", meta=None):
        """
        Args:
            valores (array-like): Eigenvalues in any order
            tipo (str, optional): Source matrix kind. Defaults to "general".
            meta (dict, optional): Provenance. Defaults to {}.
        """
        arreglo = np.sort(np.asarray(valores, dtype=np.float64).ravel())[::-1].copy()
        arreglo.setflags(write=False)
        self.valores = arreglo
        self.tipo = tipo
        self.meta = dict(meta or {})

    @property
    def n(self):
        """int: Number of eigenvalues."""
        return self.valores.size

    def es_vacio(self):
        """bool: True when there are no eigenvalues."""
        return self.valores.size == 0

    def exigir_no_vacio(self):
        """Raise EspectroVacioError on an empty spectrum."""
        if self.es_vacio():
            raise EspectroVacioError(f"Empty spectrum ({self.tipo})")

    @property
    def maximo(self):
        """float: Largest eigenvalue."""
        self.exigir_no_vacio()
        return float(self.valores[0])

    @property
    def minimo(self):
        """float: Smallest eigenvalue."""
        self.exigir_no_vacio()
        return float(self.valores[-1])

    def suma(self):
        """float: Sum of the eigenvalues (the trace of the source)."""
        return float(self.valores.sum())

    def suma_cuadrados(self):
        """float: Sum of squares (squared Frobenius norm of the source)."""
        return float(np.dot(self.valores, self.valores))

    def __len__(self):
        return self.valores.size

    def __iter__(self):
        return iter(self.valores.tolist())

    def __getitem__(self, indice):
        return float(self.valores[indice])

    def to_dict(self):
        """
        Convert to a dictionary for JSON output.

        Returns:
            dict: kind, metadata and the eigenvalues
        """
        return {
            "kind": self.tipo,
            "meta": dict(self.meta),
            "values": self.valores.tolist(),
        }

    def a_filas(self):
        """list: Rows {index, value} for CSV output."""
        return [{"index": i, "value": float(v)} for i, v in enumerate(self.valores)]

    def __repr__(self):
        return f"Espectro(tipo={self.tipo}, n={self.n})"


class HistogramaESD:
    """
    Histogram of scaled eigenvalues.

    Attributes:
        bordes (numpy.ndarray): bins + 1 strictly increasing edges
        conteos (numpy.ndarray): Integer counts per bin
        escala (str): Scaling applied before binning
    """

    def __init__(self, bordes, conteos, escala="none"):
        bordes = np.asarray(bordes, dtype=np.float64)
        conteos = np.asarray(conteos, dtype=np.int64)
        if bordes.size != conteos.size + 1:
            raise ParametroInvalidoError("A histogram needs one more edge than bins")
        if np.any(np.diff(bordes) <= 0):
            raise ParametroInvalidoError("Histogram edges must be strictly increasing")
        self.bordes = bordes
        self.conteos = conteos
        self.escala = escala

    @property
    def total(self):
        """int: Sum of the counts."""
        return int(self.conteos.sum())

    def a_filas(self):
        """list: Rows {bin_left, bin_right, count} for CSV output."""
        return [
            {"bin_left": float(izq), "bin_right": float(der), "count": int(c)}
            for izq, der, c in zip(self.bordes[:-1], self.bordes[1:], self.conteos)
        ]

    def to_dict(self):
        """dict: Edges, counts and scaling for JSON output."""
        return {
            "scaling": self.escala,
            "bin_edges": self.bordes.tolist(),
            "counts": self.conteos.tolist(),
        }

    def __repr__(self):
        return f"HistogramaESD(bins={self.conteos.size}, total={self.total}, escala={self.escala})"
