import csv
import io
import json

import pytest

from config import COLUMNAS_CSV, MAX_REINTENTOS
from gestor import GestorExperimentos, GestorVerificacion, margen, tasa_dominancia
from gestor.gestor_experimentos import muestrear_conexo
from models.configuracion_barrido import ConfiguracionBarrido
from models.reportes import RegistroEnsayo
from utils.excepciones import DesconexionError
from utils.semillas import mezclar_semilla


def _filas(texto):
    lineas = [linea for linea in texto.splitlines() if not linea.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lineas))))


@pytest.fixture
def gestor(handler):
    return GestorExperimentos(handler, trabajos=1)


@pytest.fixture
def cfg_pequena():
    return ConfiguracionBarrido(["unweighted", "harary"], [30, 40], 0.5, 2, 11,
                               remuestrear_desconectados=True)


# ------------------------------------------------------------------
# Sampling
# ------------------------------------------------------------------

def test_muestreo_determinista():
    a = muestrear_conexo(40, 0.5, 7, 0, 3, True, True)
    b = muestrear_conexo(40, 0.5, 7, 0, 3, True, True)
    assert a[0] == b[0]
    assert a[2] == b[2] == mezclar_semilla(7, 0, 3)
    assert a[3] == 0


def test_muestreo_desconectado_sin_remuestreo():
    with pytest.raises(DesconexionError):
        muestrear_conexo(20, 0.05, 1, 0, 0, False, True)


def test_muestreo_desconectado_agota_reintentos():
    with pytest.raises(DesconexionError):
        muestrear_conexo(20, 0.02, 1, 0, 0, True, True)


def test_muestreo_sin_peso_acepta_desconectado():
    grafo, distancias, semilla, reintentos = muestrear_conexo(20, 0.05, 1, 0, 0, False, False)
    assert grafo.n == 20
    assert reintentos == 0
    assert semilla == mezclar_semilla(1, 0, 0)


# ------------------------------------------------------------------
# Sweeps
# ------------------------------------------------------------------

def test_barrido_orden_y_esquema(gestor, cfg_pequena):
    registros, veredicto = gestor.ejecutar_barrido(cfg_pequena)
    assert [r.clave for r in registros] == [(c, t) for c in range(4) for t in range(2)]
    assert not any(r.fallido for r in registros)

    texto = gestor.registros_a_csv(registros, cfg_pequena)
    assert texto.startswith("# graph-energy")
    encabezado = [linea for linea in texto.splitlines() if not linea.startswith("#")][0]
    assert tuple(encabezado.split(",")) == COLUMNAS_CSV
    assert len(_filas(texto)) == len(registros) * len(cfg_pequena.cantidades)

    assert len(veredicto.entradas) == 4 * len(cfg_pequena.cantidades)


def test_barrido_serie_igual_a_paralelo(handler, cfg_pequena):
    serie = GestorExperimentos(handler, trabajos=1)
    paralelo = GestorExperimentos(handler, trabajos=2)
    texto_serie = serie.registros_a_csv(serie.ejecutar_barrido(cfg_pequena)[0], cfg_pequena)
    texto_paralelo = paralelo.registros_a_csv(paralelo.ejecutar_barrido(cfg_pequena)[0], cfg_pequena)
    assert texto_serie == texto_paralelo


def test_barrido_repetido_es_identico(gestor, cfg_pequena):
    primero = gestor.registros_a_csv(gestor.ejecutar_barrido(cfg_pequena)[0], cfg_pequena)
    segundo = gestor.registros_a_csv(gestor.ejecutar_barrido(cfg_pequena)[0], cfg_pequena)
    assert primero == segundo


def test_ensayos_fallidos_sin_remuestreo(gestor):
    cfg = ConfiguracionBarrido(["harary"], [20], 0.05, 2, 5, cantidades=["LE_f", "LEL_f"])
    registros, veredicto = gestor.ejecutar_barrido(cfg)

    assert all(r.fallido for r in registros)
    assert all(r.motivo for r in registros)
    filas = _filas(gestor.registros_a_csv(registros, cfg))
    assert {fila["diameter"] for fila in filas} == {"inf"}
    assert {fila["empirical"] for fila in filas} == {""}

    assert not veredicto.aprobado
    assert all(e.aprobado is False and e.fallidos == 2 and e.ensayos == 0
               for e in veredicto.entradas)


def test_ensayos_fallidos_con_remuestreo(gestor):
    cfg = ConfiguracionBarrido(["harary"], [20], 0.02, 1, 5,
                               remuestrear_desconectados=True, cantidades=["LE_f"])
    registros, _ = gestor.ejecutar_barrido(cfg)
    assert registros[0].fallido
    assert registros[0].reintentos == MAX_REINTENTOS


@pytest.mark.lento
def test_razon_lel_harary_se_acerca_a_uno(gestor):
    cfg = ConfiguracionBarrido(["harary"], [100, 200, 400], 0.5, 3, 31,
                               remuestrear_desconectados=True, cantidades=["LEL_f"])
    registros, _ = gestor.ejecutar_barrido(cfg)
    distancias = []
    for n in cfg.valores_n:
        razones = [r.razon("LEL_f") for r in registros if r.n == n and not r.fallido]
        distancias.append(abs(sum(razones) / len(razones) - 1))
    for anterior, siguiente in zip(distancias, distancias[1:]):
        assert siguiente < anterior or siguiente <= 0.02


def test_json_del_barrido(gestor, cfg_pequena):
    registros, veredicto = gestor.ejecutar_barrido(cfg_pequena)
    documento = gestor.registros_a_json(registros, veredicto, cfg_pequena)
    json.dumps(documento)
    assert documento["config"]["n_values"] == [30, 40]
    assert len(documento["records"]) == 8
    assert "pass" in documento["verdict"]


def test_guardar_resultados_en_archivo(gestor, cfg_pequena, tmp_path):
    registros, veredicto = gestor.ejecutar_barrido(cfg_pequena)
    ruta = tmp_path / "barrido.csv"
    resultado = gestor.guardar_resultados(registros, veredicto, cfg_pequena, str(ruta))
    assert resultado['exito']
    assert ruta.read_text(encoding="utf-8") == gestor.registros_a_csv(registros, cfg_pequena)


# ------------------------------------------------------------------
# Dominance and audit
# ------------------------------------------------------------------

def _registro(le, e_w, fallido=False):
    return RegistroEnsayo("unweighted", 10, 0.5, 0, 0, 1,
                          empiricos=None if fallido else {"LE_f": le, "E_Wf": e_w},
                          fallido=fallido)


def test_margen_y_tasa_dominancia():
    registros = [_registro(5.0, 3.0), _registro(3.0, 3.0), _registro(0, 0, fallido=True),
                 _registro(9.0, 1.0)]
    assert margen(registros[0]) == pytest.approx(2.0)
    assert margen(registros[2]) is None
    assert tasa_dominancia(registros) == pytest.approx(0.5)
    assert tasa_dominancia([]) == 0.0


def test_verificar_conjetura_no_modifica_la_configuracion(gestor):
    cfg = ConfiguracionBarrido(["unweighted"], [50], 0.5, 3, 2, cantidades=["LEL_f"])
    assert gestor.verificar_conjetura(cfg) == pytest.approx(1.0)
    assert cfg.cantidades == ("LEL_f",)


def test_auditoria_grafo_completo(gestor):
    auditoria = gestor.auditoria_grado_diametro(60, 1.0, 3, 9)
    assert auditoria == {"degree_rate": 1.0, "diameter_rate": 0.0, "trials": 3}


# ------------------------------------------------------------------
# Verification battery
# ------------------------------------------------------------------

def test_banda_se_ensancha_en_modo_rapido(gestor):
    completa = GestorVerificacion(gestor)
    rapida = GestorVerificacion(gestor, rapido=True)
    assert completa.n == 400 and rapida.n == 200
    assert completa.banda(0.9, 1.1) == pytest.approx((0.9, 1.1))
    bajo, alto = rapida.banda(0.9, 1.1)
    assert bajo == pytest.approx(1 - 0.1 * 2 ** 0.5)
    assert alto == pytest.approx(1 + 0.1 * 2 ** 0.5)


def test_oraculos_reducidos(gestor):
    resultados = GestorVerificacion(gestor).comprobar_oraculos(sorteos=50, pares_weyl=20)
    assert [r.nombre for r in resultados] == [
        "oracle_characteristic_polynomial", "oracle_weyl", "oracle_complete_graph",
    ]
    assert all(r.aprobado for r in resultados)


def test_metamorficas(gestor):
    assert all(r.aprobado for r in GestorVerificacion(gestor).comprobar_metamorficas())


def test_csv_de_verificacion(gestor, handler):
    verificacion = GestorVerificacion(gestor, rapido=True)
    texto = verificacion.a_csv(verificacion.comprobar_oraculos(sorteos=10, pares_weyl=5), handler)
    assert texto.splitlines()[0] == f"# verify n=200 fast=true master_seed={verificacion.semilla_maestra}"
    assert len(_filas(texto)) == 3


@pytest.mark.lento
def test_bateria_rapida_completa(handler):
    verificacion = GestorVerificacion(GestorExperimentos(handler), rapido=True)
    fallos = [str(r) for r in verificacion.ejecutar() if not r.aprobado]
    assert fallos == []
