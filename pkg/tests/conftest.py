"""Shared fixtures: small graphs with known spectra and seeded samples."""

import logging

import pytest

from algoritmos_grafos.busqueda_anchura import bfs_todos_los_pares
from algoritmos_grafos.generacion import generar_gnp
from config import LOG_NAME
from models.grafo import Grafo
from utils.archivo_handler import ArchivoHandler


def _completo(n):
    return Grafo(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@pytest.fixture
def k3():
    return _completo(3)


@pytest.fixture
def k5():
    return _completo(5)


@pytest.fixture
def p2():
    return Grafo(2, [(0, 1)])


@pytest.fixture
def p3():
    return Grafo(3, [(0, 1), (1, 2)])


@pytest.fixture
def c5():
    return Grafo(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def vacio():
    return Grafo(4)


@pytest.fixture
def desconectado():
    return Grafo(4, [(0, 1), (2, 3)])


@pytest.fixture
def gnp_50():
    """G(50, 0.5) with seed 3, connected and of diameter 2."""
    grafo = generar_gnp(50, 0.5, 3)
    return grafo, bfs_todos_los_pares(grafo)


@pytest.fixture
def handler():
    return ArchivoHandler()


@pytest.fixture(autouse=True)
def logger_limpio():
    """main() attaches handlers to the captured streams; drop them after each test."""
    yield
    logger = logging.getLogger(LOG_NAME)
    for handler in logger.handlers:
        handler.close()
    logger.handlers.clear()
    logger.propagate = True
