import pytest

from config import BARRIDOS_DIR, CANTIDADES
from models.configuracion_barrido import ConfiguracionBarrido, cargar_configuracion
from utils.excepciones import ConfiguracionError
from utils.validaciones import validar_booleano, validar_lista_no_vacia, validar_rango

BASE = """\
weights = ["unweighted", "harary"]
n_values = [50, 100]
p = 0.5
trials = 3
master_seed = 7
"""


def test_valores_por_defecto():
    cfg = cargar_configuracion(BASE)
    assert cfg.pesos == ("unweighted", "harary")
    assert cfg.valores_n == (50, 100)
    assert cfg.ensayos == 3
    assert cfg.remuestrear_desconectados is False
    assert cfg.cantidades == CANTIDADES
    assert cfg.tolerancia == 0.10
    assert cfg.holgura_intervalo == 0.05
    assert cfg.tolerancia_bulto == 0.20
    assert cfg.alpha == 0.5


def test_claves_opcionales():
    texto = BASE + ('resample_disconnected = true\nquantities = ["IE_f", "LEL_f"]\n'
                    'tolerance = 0.2\nbracket_slack = 0.1\nalpha = -1.0\n')
    cfg = cargar_configuracion(texto)
    assert cfg.remuestrear_desconectados is True
    assert cfg.cantidades == ("LEL_f", "IE_f")
    assert cfg.tolerancia == 0.2
    assert cfg.holgura_intervalo == 0.1
    assert cfg.alpha == -1.0


def test_escalares_como_listas():
    cfg = cargar_configuracion(BASE.replace('["unweighted", "harary"]', '"gutman"')
                               .replace("[50, 100]", "80"))
    assert cfg.pesos == ("gutman",)
    assert cfg.valores_n == (80,)


def test_celdas_en_orden():
    cfg = cargar_configuracion(BASE)
    assert cfg.celdas() == [(0, "unweighted", 50), (1, "unweighted", 100),
                            (2, "harary", 50), (3, "harary", 100)]


def test_ida_y_vuelta_de_claves():
    datos = cargar_configuracion(BASE).to_dict()
    assert list(datos)[:5] == ["weights", "n_values", "p", "trials", "master_seed"]
    assert ConfiguracionBarrido(datos["weights"], datos["n_values"], datos["p"],
                                datos["trials"], datos["master_seed"]).to_dict() == datos


@pytest.mark.parametrize("reemplazo, linea", [
    (("p = 0.5", "p = 1.5"), 3),
    (("p = 0.5", "p = 0.0"), 3),
    (("trials = 3", "trials = 0"), 4),
    (("master_seed = 7", "master_seed = -7"), 5),
    (("[50, 100]", "[50, 1]"), 2),
    (('"harary"]', '"wiener"]'), 1),
    (("p = 0.5", 'p = "half"'), 3),
])
def test_errores_con_numero_de_linea(reemplazo, linea):
    with pytest.raises(ConfiguracionError) as info:
        cargar_configuracion(BASE.replace(*reemplazo))
    assert info.value.linea == linea
    assert str(info.value).startswith(f"line {linea}:")


def test_clave_desconocida():
    with pytest.raises(ConfiguracionError, match="unknown key 'seeds'") as info:
        cargar_configuracion(BASE + "seeds = 3\n")
    assert info.value.linea == 6


def test_tabla_no_permitida():
    with pytest.raises(ConfiguracionError) as info:
        cargar_configuracion(BASE + "[quantities]\nx = 1\n")
    assert info.value.linea == 6


def test_clave_obligatoria_ausente():
    with pytest.raises(ConfiguracionError, match="trials"):
        cargar_configuracion(BASE.replace("trials = 3\n", ""))


def test_sintaxis_toml():
    with pytest.raises(ConfiguracionError) as info:
        cargar_configuracion(BASE + "tolerance = = 1\n")
    assert info.value.linea == 6


def test_cantidad_desconocida():
    with pytest.raises(ConfiguracionError, match="E_total") as info:
        cargar_configuracion(BASE + 'quantities = ["E_total"]\n')
    assert info.value.linea == 6


def test_tolerancia_positiva():
    with pytest.raises(ConfiguracionError):
        ConfiguracionBarrido(["harary"], [50], 0.5, 1, 1, tolerancia=0.0)


def test_es_value_error():
    with pytest.raises(ValueError):
        cargar_configuracion("p = [")


def test_configuracion_de_ejemplo():
    texto = (BARRIDOS_DIR / "barrido_ejemplo.toml").read_text(encoding="utf-8")
    cfg = cargar_configuracion(texto)
    assert cfg.pesos == ("unweighted", "harary", "hyper_wiener", "gutman")
    assert cfg.valores_n == (100, 200)
    assert cfg.remuestrear_desconectados is True
    assert "E_adj" not in cfg.cantidades
    assert len(cfg.celdas()) == 8


def test_superficie_publica_de_utils():
    import utils

    assert sorted(utils.__all__) == [
        'ArchivoHandler', 'mezclar_semilla', 'validar_entero_positivo',
        'validar_probabilidad', 'validar_semilla',
    ]


@pytest.mark.parametrize("validacion, valido", [
    (validar_rango(0.5, 0, 1, "tolerance"), True),
    (validar_rango(2, 0, 1, "tolerance"), False),
    (validar_booleano(True, "resample_disconnected"), True),
    (validar_booleano("yes", "resample_disconnected"), False),
    (validar_lista_no_vacia(["harary"], "weights"), True),
    (validar_lista_no_vacia([], "weights"), False),
    (validar_lista_no_vacia("harary", "weights"), False),
])
def test_validaciones_de_la_configuracion(validacion, valido):
    assert set(validacion) == {'valido', 'mensaje'}
    assert validacion['valido'] is valido
