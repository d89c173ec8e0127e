import math

import numpy as np
import pytest

from algoritmos_espectrales.matrices import construir_no_ponderadas, laplaciano_completo
from algoritmos_espectrales.valores_propios import valores_propios_simetricos
from pesos import obtener_peso, registro
from pesos.funcion_peso import DISTANCIA, ClaseLimite, FuncionPeso
from predictores import (
    clasificar_caso,
    fila_tabla,
    intervalo_weyl_distancia,
    predecir,
    predecir_bulto,
    predecir_energia_adyacencia,
    predecir_energia_wf,
    predecir_intervalo_le,
    predecir_lel_adyacencia,
    predecir_lel_ie,
)
from utils.excepciones import ParametroInvalidoError, PesoNoAplicableError, ProbabilidadInvalidaError


def _peso_distancia(f1, f2, clase):
    return FuncionPeso(
        nombre="prueba",
        tipo=DISTANCIA,
        formula=lambda D, a, b, ctx: np.where(D == 1, f1, f2),
        f1=lambda n, p: f1,
        f2=lambda n, p: f2,
        clase_limite=clase,
        orden_tabla=lambda n, p: 1.0,
        usa_grados=False,
    )


# ---------------------------------------------------------------- Tables

@pytest.mark.parametrize("peso", [p for p in registro() if p.tabla_exacta], ids=lambda p: p.nombre)
@pytest.mark.parametrize("n, p", [(400, 0.5), (1000, 0.3), (10 ** 6, 0.8)])
def test_tablas_exactas(peso, n, p):
    assert predecir_lel_ie(peso, n, p).valor == pytest.approx(peso.orden_tabla(n, p), rel=1e-9)


@pytest.mark.parametrize("nombre, n, rel", [
    ("abc", 10 ** 6, 1e-3),
    ("azi", 10 ** 6, 1e-3),
    ("lanzhou", 10 ** 6, 1e-3),
    ("first_multi_zagreb", 10 ** 12, 0.05),
    ("modified_multi_zagreb", 10 ** 12, 0.05),
    ("second_multi_zagreb", 10 ** 12, 0.05),
])
def test_tablas_asintoticas(nombre, n, rel):
    peso = obtener_peso(nombre)
    assert not peso.tabla_exacta
    assert predecir_lel_ie(peso, n, 0.5).valor == pytest.approx(peso.orden_tabla(n, 0.5), rel=rel)


def test_fila_de_tabla():
    fila = fila_tabla(obtener_peso("gutman"), 400, 0.5)
    assert fila["limit_class"] == "FINITE(0.5)"
    assert fila["relative_difference"] < 1e-9
    assert fila["exact"] is True


# ---------------------------------------------------------------- Point predictions

def test_lel_harary():
    prediccion = predecir_lel_ie(obtener_peso("harary"), 1000, 0.5)
    assert prediccion.valor == pytest.approx(27386.13, abs=0.01)
    assert prediccion.es_puntual


def test_ie_tiene_el_mismo_termino():
    peso = obtener_peso("degree_distance")
    assert predecir(peso, 400, 0.3, "IE_f").valor == predecir(peso, 400, 0.3, "LEL_f").valor


def test_lel_sin_peso():
    assert predecir_lel_ie(obtener_peso("unweighted"), 400, 0.5).valor == pytest.approx(
        math.sqrt(0.5) * 400 ** 1.5)


def test_energia_wf_gutman():
    assert predecir_energia_wf(obtener_peso("gutman"), 100, 0.5).valor == pytest.approx(
        1061033, rel=1e-6)


def test_energia_wf_indeterminada_con_c_uno():
    prediccion = predecir_energia_wf(_peso_distancia(2.0, 2.0, ClaseLimite.constante(1)), 100, 0.5)
    assert prediccion.es_indeterminada
    assert prediccion.to_dict()["value"] == "INDETERMINATE"


def test_energia_adyacencia():
    assert predecir_energia_adyacencia(obtener_peso("randic"), 400, 0.5).valor == pytest.approx(
        16.98, abs=0.01)
    sin_peso = predecir_energia_adyacencia(obtener_peso("unweighted"), 400, 0.5).valor
    assert sin_peso / 400 ** 1.5 == pytest.approx(8 / (3 * math.pi) * 0.5)
    with pytest.raises(PesoNoAplicableError):
        predecir_energia_adyacencia(obtener_peso("harary"), 400, 0.5)


def test_lel_adyacencia():
    peso = obtener_peso("first_zagreb")
    assert predecir_lel_adyacencia(peso, 400, 0.5).valor == pytest.approx(
        predecir_lel_ie(peso, 400, 0.5).valor)
    with pytest.raises(PesoNoAplicableError):
        predecir_lel_adyacencia(obtener_peso("gutman"), 400, 0.5)


def test_monotonia_en_n():
    for peso in registro():
        valores = [predecir_lel_ie(peso, n, 0.4).valor for n in (100, 200, 400, 800)]
        assert all(a < b for a, b in zip(valores, valores[1:])), peso.nombre


# ---------------------------------------------------------------- Brackets

def test_intervalo_le_sin_peso():
    inferior, superior = predecir_intervalo_le(obtener_peso("unweighted"), 1000, 0.5).intervalo
    assert inferior == pytest.approx(14907.1, abs=0.1)
    assert superior == pytest.approx(22360.7, abs=0.1)


def test_intervalo_le_plus():
    inferior, superior = predecir_intervalo_le(obtener_peso("unweighted"), 400, 0.5,
                                               "LE_plus_f").intervalo
    escala = 400 ** 1.5
    assert inferior / escala == pytest.approx((16 / (3 * math.pi) - math.sqrt(2)) * 0.5)
    assert superior / escala == pytest.approx((16 / (3 * math.pi) + math.sqrt(2)) * 0.5)


def test_intervalo_escala_con_diferencia():
    harary = predecir_intervalo_le(obtener_peso("harary"), 400, 0.5).intervalo
    hyper = predecir_intervalo_le(obtener_peso("hyper_wiener"), 400, 0.5).intervalo
    np.testing.assert_allclose(np.array(hyper), 4 * np.array(harary))


def test_intervalo_indeterminado_con_grados():
    prediccion = predecir(obtener_peso("gutman"), 400, 0.5, "LE_f")
    assert prediccion.es_indeterminada
    assert "degrees" in prediccion.motivo


def test_intervalo_cantidad_invalida():
    with pytest.raises(ParametroInvalidoError):
        predecir_intervalo_le(obtener_peso("harary"), 400, 0.5, "E_Wf")


# ---------------------------------------------------------------- Dispatcher

def test_despachador():
    harary = obtener_peso("harary")
    assert predecir(harary, 400, 0.5, "E_adj").es_indeterminada
    assert predecir(harary, 400, 0.5, "E_Wf").es_puntual
    assert predecir(harary, 400, 0.5, "LE_f").intervalo is not None
    with pytest.raises(ParametroInvalidoError):
        predecir(harary, 400, 0.5, "XYZ")


@pytest.mark.parametrize("n, p, error", [
    (1, 0.5, ParametroInvalidoError),
    (100, 0.0, ProbabilidadInvalidaError),
    (100, 1.0, ProbabilidadInvalidaError),
])
def test_argumentos_invalidos(n, p, error):
    with pytest.raises(error):
        predecir(obtener_peso("harary"), n, p, "LEL_f")
    with pytest.raises(error):
        predecir(obtener_peso("randic"), n, p, "E_adj")


def test_json_de_predicciones():
    harary = obtener_peso("harary")
    assert set(predecir(harary, 400, 0.5, "LEL_f").to_dict()) == {"quantity", "value", "source"}
    assert set(predecir(harary, 400, 0.5, "LE_f").to_dict()) == {"quantity", "bracket", "source"}


# ---------------------------------------------------------------- Bulk and cases

def test_bulto():
    assert predecir_bulto(obtener_peso("hyper_wiener"), 100, 0.5) == 200.0
    assert predecir_bulto(obtener_peso("unweighted"), 400, 0.5) == 200.0


@pytest.mark.parametrize("f1, f2, tipo, esperado", [
    (1.0, 0.5, "L_f", (1, 0, 2)),
    (1.0, -1.0, "L_f", (2, 1, 1)),
    (1.0, 3.0, "L_f", (3, 1, 1)),
    (-2.0, -1.0, "L_f", (4, 1, 1)),
    (1.0, 0.5, "L_f_plus", (1, 2, 1)),
    (1.0, -1.0, "L_f_plus", (2, 1, 2)),
])
def test_casos(f1, f2, tipo, esperado):
    peso = _peso_distancia(f1, f2, ClaseLimite.constante(f1 / f2))
    assert clasificar_caso(peso, 100, 0.5, tipo) == esperado


def test_caso_de_matriz_desconocida():
    with pytest.raises(ParametroInvalidoError):
        clasificar_caso(obtener_peso("harary"), 100, 0.5, "W_f")


@pytest.mark.parametrize("D1, D2", [(1.0, 0.5), (1.0, 3.0), (1.0, -0.5), (-1.0, -2.0)])
def test_cotas_weyl_de_distancia(gnp_50, D1, D2):
    grafo, _ = gnp_50
    _, L, _ = construir_no_ponderadas(grafo)
    n = grafo.n
    L_D = (D1 - D2) * L.entradas + D2 * laplaciano_completo(n).entradas
    espectro = valores_propios_simetricos(L_D).valores
    inferior, superior = intervalo_weyl_distancia(valores_propios_simetricos(L), D1, D2, n)
    assert np.all(espectro >= inferior - 1e-9 * n)
    assert np.all(espectro <= superior + 1e-9 * n)
