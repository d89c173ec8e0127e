"""
Grafo Model - Graph Energy Toolkit

This module defines the immutable simple undirected graph used everywhere
in the toolkit, plus the two value objects derived from it: the all-pairs
distance table and the structural statistics (degrees, diameter,
connectivity).

Classes:
    Grafo: Simple undirected graph on vertices 0..n-1
    TablaDistancias: All-pairs unweighted shortest-path distances
    EstadisticasGrafo: Degrees, minimum/maximum degree, diameter, connectivity

Constants:
    INFINITO: Sentinel for unreachable pairs and for the diameter of a
              disconnected graph
"""

import math

import networkx as nx
import numpy as np

from utils.excepciones import (
    AristaDuplicadaError,
    GrafoError,
    LazoError,
    VerticeFueraDeRangoError,
)


INFINITO = math.inf


class Grafo:
    """
    Simple undirected graph on the vertices 0..n-1.

    The edge set is stored as a sorted tuple of pairs (i, j) with i < j, in
    lexicographic order, and the dense adjacency matrix is built once and
    frozen. Instances never change after construction and can be shared
    between threads.

    Attributes:
        n (int): Number of vertices
        aristas (tuple): Sorted edges (i, j) with i < j
    """

    __slots__ = ("n", "aristas", "_adyacencia")

    def __init__(self, n, aristas=()):
        """
        Initialize a new Grafo instance.

        Args:
            n (int): Number of vertices (>= 1)
            aristas (iterable, optional): Unordered pairs. Defaults to ().

        Raises:
            GrafoError: If n < 1
            VerticeFueraDeRangoError: If an endpoint is outside 0..n-1
            LazoError: If an edge joins a vertex to itself
            AristaDuplicadaError: If the same pair appears twice
        """
        if int(n) < 1:
            raise GrafoError(f"A graph needs at least one vertex, got n={n}")
        n = int(n)

        vistas = set()
        for arista in aristas:
            i, j = (int(v) for v in arista)
            if not (0 <= i < n and 0 <= j < n):
                raise VerticeFueraDeRangoError(f"Edge ({i}, {j}) outside 0..{n - 1}")
            if i == j:
                raise LazoError(f"Self-loop at vertex {i}")
            par = (i, j) if i < j else (j, i)
            if par in vistas:
                raise AristaDuplicadaError(f"Duplicate edge {par}")
            vistas.add(par)

        adyacencia = np.zeros((n, n), dtype=bool)
        if vistas:
            filas, columnas = np.array(sorted(vistas)).T
            adyacencia[filas, columnas] = True
            adyacencia[columnas, filas] = True
        adyacencia.setflags(write=False)

        self.n = n
        self.aristas = tuple(sorted(vistas))
        self._adyacencia = adyacencia

    @classmethod
    def desde_adyacencia(cls, adyacencia):
        """
        Create a graph from a symmetric boolean adjacency matrix.

        Only the upper triangle is read, so the result is always simple.

        Args:
            adyacencia (array-like): n x n adjacency matrix

        Returns:
            Grafo: New graph
        """
        matriz = np.asarray(adyacencia, dtype=bool)
        filas, columnas = np.nonzero(np.triu(matriz, k=1))
        return cls(matriz.shape[0], zip(filas.tolist(), columnas.tolist()))

    @classmethod
    def desde_networkx(cls, grafo_nx):
        """
        Create a graph from a networkx graph whose nodes are 0..n-1.

        Args:
            grafo_nx (networkx.Graph): Source graph

        Returns:
            Grafo: New graph
        """
        return cls(grafo_nx.number_of_nodes(), grafo_nx.edges())

    def a_networkx(self):
        """
        Convert to a networkx graph (used for interoperability and oracles).

        Returns:
            networkx.Graph: Graph with nodes 0..n-1 and the same edges
        """
        grafo_nx = nx.Graph()
        grafo_nx.add_nodes_from(range(self.n))
        grafo_nx.add_edges_from(self.aristas)
        return grafo_nx

    @property
    def m(self):
        """int: Number of edges."""
        return len(self.aristas)

    @property
    def matriz_adyacencia(self):
        """numpy.ndarray: Read-only boolean adjacency matrix."""
        return self._adyacencia

    def grados(self):
        """
        Vertex degrees.

        Returns:
            numpy.ndarray: Integer degrees d_0..d_{n-1}
        """
        return self._adyacencia.sum(axis=1).astype(np.int64)

    def son_adyacentes(self, i, j):
        """
        Check whether {i, j} is an edge.

        Args:
            i (int): First vertex
            j (int): Second vertex

        Returns:
            bool: True if the vertices are adjacent
        """
        return bool(self._adyacencia[i, j])

    def __eq__(self, other):
        if not isinstance(other, Grafo):
            return NotImplemented
        return self.n == other.n and self.aristas == other.aristas

    def __hash__(self):
        return hash((self.n, self.aristas))

    def __str__(self):
        return f"Grafo(n={self.n}, m={self.m})"

    def __repr__(self):
        return f"Grafo(n={self.n}, aristas={list(self.aristas)!r})"


class TablaDistancias:
    """
    All-pairs unweighted shortest-path distances.

    Entries are exact small integers stored as float64; unreachable pairs
    hold INFINITO. The table is read-only.

    Attributes:
        dist (numpy.ndarray): n x n symmetric distance table
    """

    __slots__ = ("dist",)

    def __init__(self, dist):
        """
        Args:
            dist (array-like): n x n distances, INFINITO for unreachable pairs
        """
        tabla = np.array(dist, dtype=np.float64)
        tabla.setflags(write=False)
        self.dist = tabla

    @property
    def n(self):
        """int: Number of vertices."""
        return self.dist.shape[0]

    def __call__(self, i, j):
        """Distance between i and j (INFINITO if unreachable)."""
        return self.dist[i, j]

    def es_conexo(self):
        """bool: True if every pair is reachable."""
        return bool(np.all(np.isfinite(self.dist)))

    def __repr__(self):
        return f"TablaDistancias(n={self.n})"


class EstadisticasGrafo:
    """
    Structural statistics of a graph.

    Attributes:
        grados (tuple): Degrees in vertex order
        grado_minimo (int): Minimum degree (delta)
        grado_maximo (int): Maximum degree (Delta)
        diametro (int or float): Diameter, INFINITO when disconnected
        conexo (bool): Connectivity flag
    """

    def __init__(self, grados, diametro, conexo):
        self.grados = tuple(int(d) for d in grados)
        self.grado_minimo = min(self.grados)
        self.grado_maximo = max(self.grados)
        self.diametro = diametro
        self.conexo = bool(conexo)

    def to_dict(self):
        """
        Convert to a dictionary for JSON output.

        Returns:
            dict: Statistics, with the diameter rendered as "inf" when infinite
        """
        return {
            "degrees": list(self.grados),
            "min_degree": self.grado_minimo,
            "max_degree": self.grado_maximo,
            "diameter": self.diametro if self.conexo else "inf",
            "connected": self.conexo,
        }

    def __repr__(self):
        return (f"EstadisticasGrafo(delta={self.grado_minimo}, Delta={self.grado_maximo}, "
                f"diametro={self.diametro}, conexo={self.conexo})")
