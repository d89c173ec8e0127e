"""
Edge-List Format - Graph Energy Toolkit

Plain-text interchange format for graphs:

    n m
    i j
    ...

ASCII, LF line endings, decimal integers separated by single spaces, one
edge per line after the "n m" header, 0-indexed vertices. The writer emits
edges in lexicographic order; the reader accepts any order but rejects
malformed headers, out-of-range vertices, self-loops and duplicate edges,
each with its own exception class.
"""

from models.grafo import Grafo
from utils.excepciones import (
    AristaDuplicadaError,
    EncabezadoInvalidoError,
    FormatoAristasError,
    LazoError,
    VerticeFueraDeRangoError,
)


def _enteros(linea, esperados):
    """Parse one line into exactly `esperados` non-negative integers."""
    partes = linea.split(" ")
    if len(partes) != esperados or not all(parte.isascii() and parte.isdigit() for parte in partes):
        return None
    return [int(parte) for parte in partes]


def leer_lista_aristas(texto):
    """
    Parse edge-list text into a graph.

    Args:
        texto (str): Edge-list text

    Returns:
        Grafo: Parsed graph

    Raises:
        EncabezadoInvalidoError: Missing/malformed header or wrong edge count
        FormatoAristasError: Malformed edge line
        VerticeFueraDeRangoError: Vertex index outside 0..n-1
        LazoError: Self-loop
        AristaDuplicadaError: Repeated edge

    Example:
        >>> leer_lista_aristas("3 2\\n0 1\\n1 2\\n").m
        2
    """
    lineas = texto.split("\n")
    if lineas and lineas[-1] == "":
        lineas.pop()

    if not lineas:
        raise EncabezadoInvalidoError("line 1: missing 'n m' header")

    encabezado = _enteros(lineas[0], 2)
    if encabezado is None:
        raise EncabezadoInvalidoError(f"line 1: malformed header {lineas[0]!r}, expected 'n m'")

    n, m = encabezado
    if n < 1:
        raise EncabezadoInvalidoError("line 1: n must be at least 1")
    if len(lineas) - 1 != m:
        raise EncabezadoInvalidoError(
            f"line 1: header announces {m} edges but {len(lineas) - 1} edge lines follow"
        )

    aristas = []
    vistas = set()
    for numero_linea, linea in enumerate(lineas[1:], start=2):
        par = _enteros(linea, 2)
        if par is None:
            raise FormatoAristasError(f"line {numero_linea}: malformed edge {linea!r}")

        i, j = par
        if i >= n or j >= n:
            raise VerticeFueraDeRangoError(
                f"line {numero_linea}: vertex out of range in edge ({i}, {j}) for n={n}"
            )
        if i == j:
            raise LazoError(f"line {numero_linea}: self-loop at vertex {i}")

        clave = (min(i, j), max(i, j))
        if clave in vistas:
            raise AristaDuplicadaError(f"line {numero_linea}: duplicate edge {clave}")
        vistas.add(clave)
        aristas.append(clave)

    return Grafo(n, aristas)


def escribir_lista_aristas(grafo):
    """
    Render a graph as edge-list text.

    Args:
        grafo (Grafo): Graph to write

    Returns:
        str: Header plus one "i j" line per edge, lexicographically sorted

    Example:
        >>> from models.grafo import Grafo
        >>> escribir_lista_aristas(Grafo(3, [(1, 2), (0, 2), (0, 1)]))
        '3 3\\n0 1\\n0 2\\n1 2\\n'
    """
    lineas = [f"{grafo.n} {grafo.m}"]
    lineas.extend(f"{i} {j}" for i, j in grafo.aristas)
    return "\n".join(lineas) + "\n"
