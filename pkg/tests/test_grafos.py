import networkx as nx
import numpy as np
import pytest

from algoritmos_grafos.busqueda_anchura import bfs_todos_los_pares
from algoritmos_grafos.estadisticas import estadisticas_grafo, grados_en_ventana, ventana_grados
from algoritmos_grafos.generacion import generar_gnp
from algoritmos_grafos.lista_aristas import escribir_lista_aristas, leer_lista_aristas
from config import GRAFOS_DIR
from gestor import GestorExperimentos
from models.grafo import INFINITO, Grafo
from utils.excepciones import (
    AristaDuplicadaError,
    EncabezadoInvalidoError,
    FormatoAristasError,
    GrafoError,
    LazoError,
    ParametroInvalidoError,
    ProbabilidadInvalidaError,
    VerticeFueraDeRangoError,
)
from utils.semillas import mezclar_semilla


# ---------------------------------------------------------------- Grafo

def test_aristas_ordenadas_y_sin_orientacion():
    grafo = Grafo(4, [(3, 1), (0, 2), (1, 0)])
    assert grafo.aristas == ((0, 1), (0, 2), (1, 3))
    assert grafo.son_adyacentes(3, 1)
    assert not grafo.son_adyacentes(2, 3)
    assert grafo.grados().tolist() == [2, 2, 1, 1]


def test_adyacencia_de_solo_lectura(k3):
    with pytest.raises(ValueError):
        k3.matriz_adyacencia[0, 1] = False


@pytest.mark.parametrize("aristas, error", [
    ([(0, 4)], VerticeFueraDeRangoError),
    ([(1, 1)], LazoError),
    ([(0, 1), (1, 0)], AristaDuplicadaError),
])
def test_aristas_invalidas(aristas, error):
    with pytest.raises(error):
        Grafo(4, aristas)


def test_grafo_sin_vertices():
    with pytest.raises(GrafoError):
        Grafo(0)


def test_ida_y_vuelta_networkx(c5):
    assert Grafo.desde_networkx(c5.a_networkx()) == c5
    assert Grafo.desde_adyacencia(c5.matriz_adyacencia) == c5


# ---------------------------------------------------------------- Edge list

def test_escritura_lexicografica():
    grafo = Grafo(3, [(1, 2), (0, 2), (0, 1)])
    assert escribir_lista_aristas(grafo) == "3 3\n0 1\n0 2\n1 2\n"


def test_lectura_en_cualquier_orden():
    grafo = leer_lista_aristas("4 2\n3 1\n0 2\n")
    assert grafo.aristas == ((0, 2), (1, 3))


def test_grafo_sin_aristas_solo_encabezado():
    assert escribir_lista_aristas(Grafo(5)) == "5 0\n"
    assert leer_lista_aristas("5 0\n").m == 0


@pytest.mark.parametrize("texto, error", [
    ("", EncabezadoInvalidoError),
    ("3\n", EncabezadoInvalidoError),
    ("3 2\n0 1\n", EncabezadoInvalidoError),
    ("3 1\n0 x\n", FormatoAristasError),
    ("2 1\n0 ¹\n", FormatoAristasError),
    ("3 1\n0 ٣\n", FormatoAristasError),
    ("3 1\n0 3\n", VerticeFueraDeRangoError),
    ("3 1\n2 2\n", LazoError),
    ("3 2\n0 1\n1 0\n", AristaDuplicadaError),
])
def test_lista_mal_formada(texto, error):
    with pytest.raises(error):
        leer_lista_aristas(texto)


def test_errores_de_formato_son_value_error():
    with pytest.raises(ValueError):
        leer_lista_aristas("nada")


# ---------------------------------------------------------------- BFS

def test_distancias_del_camino(p3):
    dist = bfs_todos_los_pares(p3)
    np.testing.assert_array_equal(dist.dist, [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    assert dist.es_conexo()


def test_distancia_infinita_entre_componentes(desconectado):
    dist = bfs_todos_los_pares(desconectado)
    assert dist(0, 2) == INFINITO
    assert dist(0, 1) == 1
    assert not dist.es_conexo()


@pytest.mark.parametrize("semilla", [1, 2, 3])
def test_bfs_contra_networkx(semilla):
    grafo = generar_gnp(30, 0.15, semilla)
    dist = bfs_todos_los_pares(grafo)
    esperado = dict(nx.all_pairs_shortest_path_length(grafo.a_networkx()))
    for i in range(grafo.n):
        for j in range(grafo.n):
            assert dist(i, j) == esperado[i].get(j, INFINITO)


# ---------------------------------------------------------------- Generation

def test_casos_extremos_de_p():
    assert generar_gnp(5, 1.0, 0).m == 10
    assert generar_gnp(5, 0.0, 0).m == 0


def test_generacion_determinista():
    assert generar_gnp(100, 0.5, 7) == generar_gnp(100, 0.5, 7)
    assert generar_gnp(100, 0.5, 7) != generar_gnp(100, 0.5, 8)


def test_densidad_aproximada():
    grafo = generar_gnp(200, 0.3, 11)
    densidad = grafo.m / (200 * 199 / 2)
    assert abs(densidad - 0.3) < 0.02


@pytest.mark.parametrize("p", [-0.1, 1.5, float("nan")])
def test_probabilidad_invalida(p):
    with pytest.raises(ProbabilidadInvalidaError):
        generar_gnp(10, p, 0)


def test_semilla_invalida():
    with pytest.raises(ParametroInvalidoError):
        generar_gnp(10, 0.5, -1)


# ---------------------------------------------------------------- Statistics

def test_estadisticas_de_k5(k5):
    estadisticas = estadisticas_grafo(k5, bfs_todos_los_pares(k5))
    assert estadisticas.diametro == 1
    assert estadisticas.grado_minimo == estadisticas.grado_maximo == 4
    assert estadisticas.to_dict()["connected"] is True


def test_estadisticas_desconectado(desconectado):
    estadisticas = estadisticas_grafo(desconectado, bfs_todos_los_pares(desconectado))
    assert estadisticas.diametro == INFINITO
    assert estadisticas.to_dict()["diameter"] == "inf"


def test_ventana_de_grados(gnp_50):
    grafo, dist = gnp_50
    inferior, superior = ventana_grados(50, 0.5)
    assert inferior == pytest.approx(25 - 50 ** 0.75)
    assert grados_en_ventana(estadisticas_grafo(grafo, dist), 50, 0.5) == (
        inferior < grafo.grados().min() and grafo.grados().max() < superior
    )


def test_diametro_contra_networkx(gnp_50):
    grafo, dist = gnp_50
    assert estadisticas_grafo(grafo, dist).diametro == nx.diameter(grafo.a_networkx())


def test_numero_de_aristas_semilla_7():
    grafo = generar_gnp(200, 0.5, 7)
    assert abs(grafo.m - 4975) <= 4 * (9950 * 0.25) ** 0.5


# n = 200 at p = 0.2 still leaves a few pairs without a common neighbour.
@pytest.mark.parametrize("n, p", [(500, 0.2), (200, 0.5), (200, 0.8)])
def test_ventana_y_diametro_dos_en_lote(handler, n, p):
    auditoria = GestorExperimentos(handler, trabajos=1).auditoria_grado_diametro(n, p, 20, 2024)
    assert auditoria["trials"] == 20
    assert auditoria["degree_rate"] >= 0.95
    assert auditoria["diameter_rate"] >= 0.95


# ---------------------------------------------------------------- Seeds

def test_semillas_independientes_por_componente():
    semillas = {mezclar_semilla(1, c, t) for c in range(10) for t in range(10)}
    assert len(semillas) == 100
    assert all(0 <= s < 2 ** 64 for s in semillas)
    assert mezclar_semilla(1, 0, 0) == mezclar_semilla(1, 0, 0)


@pytest.mark.parametrize("archivo, n, m, conexo", [
    ("k3.txt", 3, 3, True),
    ("p3.txt", 3, 2, True),
    ("desconectado.txt", 4, 2, False),
])
def test_grafos_de_ejemplo(archivo, n, m, conexo):
    texto = (GRAFOS_DIR / archivo).read_text(encoding="utf-8")
    grafo = leer_lista_aristas(texto)
    assert (grafo.n, grafo.m) == (n, m)
    assert bfs_todos_los_pares(grafo).es_conexo() is conexo
    assert escribir_lista_aristas(grafo) == texto
