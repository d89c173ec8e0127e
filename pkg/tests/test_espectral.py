import math
from fractions import Fraction

import numpy as np
import pytest

from algoritmos_espectrales.matrices import (
    construir_no_ponderadas,
    laplaciano_completo,
    laplaciano_sin_signo_completo,
)
from algoritmos_espectrales.oraculos import (
    certificar_espectro,
    contar_valores_menores,
    polinomio_caracteristico_entero,
    raices_caracteristicas,
)
from algoritmos_espectrales.valores_propios import (
    cotas_weyl,
    espectro_desde_valores,
    fraccion_bulto,
    histograma_esd,
    radio_centrado_laplaciano,
    radio_espectral,
    radio_sin_perron,
    valores_propios_simetricos,
)
from algoritmos_grafos.generacion import generar_gnp
from models.espectro import Espectro, HistogramaESD
from utils.excepciones import (
    EspectroVacioError,
    MatrizNoSimetricaError,
    ParametroInvalidoError,
)


# ---------------------------------------------------------------- Eigensolver

def test_orden_descendente(k3):
    A, L, L_plus = construir_no_ponderadas(k3)
    np.testing.assert_allclose(valores_propios_simetricos(A).valores, [2, -1, -1], atol=1e-12)
    np.testing.assert_allclose(valores_propios_simetricos(L).valores, [3, 3, 0], atol=1e-12)
    np.testing.assert_allclose(valores_propios_simetricos(L_plus).valores, [4, 1, 1], atol=1e-12)


def test_espectro_de_solo_lectura():
    espectro = valores_propios_simetricos([[2.0, 1.0], [1.0, 2.0]])
    with pytest.raises(ValueError):
        espectro.valores[0] = 0.0


def test_asimetria_rechazada():
    with pytest.raises(MatrizNoSimetricaError):
        valores_propios_simetricos([[0.0, 1.0], [0.0, 0.0]])


def test_asimetria_de_redondeo_aceptada():
    M = np.array([[1.0, 2.0], [2.0 + 1e-15, 1.0]])
    np.testing.assert_allclose(valores_propios_simetricos(M).valores, [3.0, -1.0])


def test_matriz_vacia():
    espectro = valores_propios_simetricos(np.zeros((0, 0)))
    assert espectro.es_vacio()
    with pytest.raises(EspectroVacioError):
        radio_espectral(espectro)
    with pytest.raises(EspectroVacioError):
        espectro.maximo


@pytest.mark.parametrize("n", [2, 5, 17, 40])
def test_espectros_de_k_n(n):
    np.testing.assert_allclose(valores_propios_simetricos(laplaciano_completo(n)).valores,
                               [n] * (n - 1) + [0], atol=1e-10 * n)
    np.testing.assert_allclose(valores_propios_simetricos(laplaciano_sin_signo_completo(n)).valores,
                               [2 * n - 2] + [n - 2] * (n - 1), atol=1e-10 * n)


def test_traza_y_frobenius(gnp_50):
    grafo, _ = gnp_50
    A, L, _ = construir_no_ponderadas(grafo)
    espectro = valores_propios_simetricos(L)
    assert espectro.suma() == pytest.approx(2 * grafo.m)
    assert valores_propios_simetricos(A).suma_cuadrados() == pytest.approx(2 * grafo.m)


def test_meta_y_exportacion():
    espectro = espectro_desde_valores([-1.0, 1.0], meta={"n": 2})
    assert espectro.to_dict() == {"kind": "general", "meta": {"n": 2}, "values": [1.0, -1.0]}
    assert espectro.a_filas()[1] == {"index": 1, "value": -1.0}


# ---------------------------------------------------------------- Exact oracles

def test_polinomio_caracteristico():
    assert polinomio_caracteristico_entero([[2, 1], [1, 2]]) == [1, -4, 3]
    assert polinomio_caracteristico_entero([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == [1, 0, -3, -2]
    assert polinomio_caracteristico_entero([[7]]) == [1, -7]


def test_oraculos_exigen_enteros():
    with pytest.raises(ParametroInvalidoError):
        polinomio_caracteristico_entero([[0.5]])


def test_conteo_por_inercia():
    M = np.diag([1, 2, 3])
    assert contar_valores_menores(M, 2.5) == 2
    assert contar_valores_menores(M, Fraction(1, 2)) == 0
    assert contar_valores_menores([[2, 1], [1, 2]], Fraction(5, 2)) == 1
    with pytest.raises(ParametroInvalidoError):
        contar_valores_menores(M, 1)


def test_certificacion_de_raices_repetidas():
    J = np.ones((4, 4), dtype=int)
    espectro = valores_propios_simetricos(J)
    assert certificar_espectro(J, espectro)
    assert not certificar_espectro(J, espectro_desde_valores([4, 0, 0, 1e-3]))


def test_enteros_aleatorios_certificados():
    rng = np.random.Generator(np.random.PCG64(5))
    for _ in range(200):
        n = int(rng.integers(1, 5))
        T = np.triu(rng.integers(-5, 6, size=(n, n)))
        M = T + np.triu(T, 1).T
        espectro = valores_propios_simetricos(M)
        assert certificar_espectro(M, espectro, 1e-8)
        if n == 1 or np.min(-np.diff(espectro.valores)) > 1e-3:
            np.testing.assert_allclose(raices_caracteristicas(M), espectro.valores, atol=1e-6)


# ---------------------------------------------------------------- Weyl

def test_cotas_weyl_contienen_la_suma():
    rng = np.random.Generator(np.random.PCG64(9))
    for _ in range(100):
        n = int(rng.integers(2, 21))
        H, P = rng.standard_normal((n, n)), rng.standard_normal((n, n))
        H, P = H + H.T, P + P.T
        inferior, superior = cotas_weyl(valores_propios_simetricos(H), valores_propios_simetricos(P))
        suma = valores_propios_simetricos(H + P).valores
        assert np.all(suma >= inferior - 1e-8)
        assert np.all(suma <= superior + 1e-8)


# ---------------------------------------------------------------- Bulk and ESD

def test_fraccion_bulto_basica():
    assert fraccion_bulto(espectro_desde_valores([100, 50, 0]), 50, 0.01) == pytest.approx(1 / 3)
    assert fraccion_bulto(espectro_desde_valores([100, 50, 0]), 50, 0.01, (1, 1)) == 1.0
    assert fraccion_bulto(espectro_desde_valores([100, 50, 49, 0]), 50, 0.05, 2) == 1.0


@pytest.mark.parametrize("tol, excluir", [(0.0, 0), (0.1, 3), (0.1, (2, 1)), (0.1, -1), (0.1, (3, 1))])
def test_fraccion_bulto_argumentos(tol, excluir):
    with pytest.raises(ParametroInvalidoError):
        fraccion_bulto(espectro_desde_valores([3, 2, 1]), 2, tol, excluir)


def test_histograma_cuenta_todo():
    grafo = generar_gnp(100, 0.5, 1)
    A, _, _ = construir_no_ponderadas(grafo)
    espectro = valores_propios_simetricos(A)
    histograma = histograma_esd(espectro, 20)
    assert histograma.total == 100
    assert len(histograma.a_filas()) == 20


def test_histograma_semicirculo():
    grafo = generar_gnp(300, 0.5, 2)
    A, _, _ = construir_no_ponderadas(grafo)
    histograma = histograma_esd(valores_propios_simetricos(A), 10, "wigner", 0.5,
                                descartar_mayores=1)
    assert histograma.total == 299
    assert histograma.bordes[0] > -2.3
    assert histograma.bordes[-1] < 2.3


def test_histograma_rango_explicito_omite_valores():
    espectro = espectro_desde_valores([0.0, 1.0, 2.0, 3.0, 10.0])
    histograma = histograma_esd(espectro, 4, rango=(0.0, 4.0))
    assert histograma.conteos.tolist() == [1, 1, 1, 1]
    assert histograma.total == 4
    assert histograma_esd(espectro, 4, rango=(0.0, 4.0), descartar_mayores=2).total == 3


def test_histograma_rango_degenerado():
    histograma = histograma_esd(espectro_desde_valores([1.0, 1.0]), 2)
    np.testing.assert_allclose(histograma.bordes, [0.5, 1.0, 1.5])
    assert histograma.total == 2


@pytest.mark.parametrize("kwargs", [{"bins": 0}, {"bins": 3, "escala": "log"},
                                    {"bins": 3, "escala": "wigner"}])
def test_histograma_argumentos(kwargs):
    with pytest.raises(ParametroInvalidoError):
        histograma_esd(espectro_desde_valores([1.0, 2.0]), **kwargs)


def test_bordes_crecientes():
    with pytest.raises(ParametroInvalidoError):
        HistogramaESD([0, 0], [1])


# ---------------------------------------------------------------- Diagnostics

def test_diagnosticos_de_radio():
    grafo = generar_gnp(200, 0.5, 4)
    radio, referencia = radio_centrado_laplaciano(grafo, 0.5)
    assert referencia == pytest.approx(math.sqrt(2 * 200 * math.log(200)))
    assert 0.5 < radio / referencia < 2
    A, _, _ = construir_no_ponderadas(grafo)
    assert radio_sin_perron(valores_propios_simetricos(A)) < 3 * math.sqrt(200)
    assert radio_sin_perron(Espectro([1.0])) == 0.0
