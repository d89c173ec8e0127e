import csv
import io
import json

import pytest

from ui.linea_comandos import main


def _csv(texto):
    lineas = [linea for linea in texto.splitlines() if not linea.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lineas))))


@pytest.fixture
def archivo_k3(tmp_path):
    ruta = tmp_path / "k3.txt"
    ruta.write_text("3 3\n0 1\n0 2\n1 2\n", encoding="utf-8")
    return str(ruta)


@pytest.fixture
def archivo_desconectado(tmp_path):
    ruta = tmp_path / "desconectado.txt"
    ruta.write_text("4 2\n0 1\n2 3\n", encoding="utf-8")
    return str(ruta)


# ------------------------------------------------------------------
# gen
# ------------------------------------------------------------------

def test_gen_completo(capsys):
    assert main(["gen", "--n", "5", "--p", "1"]) == 0
    salida = capsys.readouterr().out
    lineas = salida.splitlines()
    assert lineas[0] == "5 10"
    assert len(lineas) == 11
    assert lineas[1] == "0 1"


def test_gen_vacio(capsys):
    assert main(["gen", "--n", "5", "--p", "0"]) == 0
    assert capsys.readouterr().out == "5 0\n"


def test_gen_determinista(capsys):
    main(["gen", "--n", "30", "--p", "0.3", "--seed", "17"])
    primera = capsys.readouterr().out
    main(["gen", "--n", "30", "--p", "0.3", "--seed", "17"])
    assert capsys.readouterr().out == primera


def test_gen_a_archivo(tmp_path, capsys):
    ruta = tmp_path / "salida" / "g.txt"
    assert main(["gen", "--n", "4", "--p", "1", "--out", str(ruta)]) == 0
    assert capsys.readouterr().out == ""
    assert ruta.read_text(encoding="utf-8").splitlines()[0] == "4 6"


# ------------------------------------------------------------------
# energy and spectrum
# ------------------------------------------------------------------

def test_energy_k3(archivo_k3, capsys):
    assert main(["energy", "--graph", archivo_k3]) == 0
    reporte = json.loads(capsys.readouterr().out)
    assert reporte["graph_energy"] == pytest.approx(4)
    assert reporte["laplacian_energy"] == pytest.approx(4)


def test_energy_csv(archivo_k3, capsys):
    assert main(["energy", "--graph", archivo_k3, "--format", "csv"]) == 0
    filas = _csv(capsys.readouterr().out)
    assert len(filas) == 1
    assert float(filas[0]["graph_energy"]) == pytest.approx(4)


def test_energy_distancia_desconectado(archivo_desconectado):
    assert main(["energy", "--graph", archivo_desconectado, "--weight", "rcw"]) == 3


def test_energy_sin_peso_desconectado(archivo_desconectado, capsys):
    assert main(["energy", "--graph", archivo_desconectado]) == 0
    assert json.loads(capsys.readouterr().out)["graph_energy"] == pytest.approx(4)


def test_energy_muestreado(capsys):
    assert main(["energy", "--n", "40", "--p", "0.5", "--seed", "3", "--weight", "harary",
                 "--resample"]) == 0
    reporte = json.loads(capsys.readouterr().out)
    assert reporte["meta"]["seed"] is not None
    assert reporte["laplacian_energy"] > 0


def test_spectrum_k3(archivo_k3, capsys):
    assert main(["spectrum", "--graph", archivo_k3, "--matrix", "L"]) == 0
    valores = [float(fila["value"]) for fila in _csv(capsys.readouterr().out)]
    assert valores == pytest.approx([3, 3, 0], abs=1e-12)


def test_spectrum_json(archivo_k3, capsys):
    assert main(["spectrum", "--graph", archivo_k3, "--format", "json"]) == 0
    datos = json.loads(capsys.readouterr().out)
    assert datos["values"] == pytest.approx([2, -1, -1], abs=1e-12)


def test_spectrum_volcado_de_matriz(archivo_k3, tmp_path, capsys):
    volcado = tmp_path / "L.txt"
    assert main(["spectrum", "--graph", archivo_k3, "--matrix", "L",
                 "--dump", str(volcado)]) == 0
    filas = [[float(x) for x in linea.split(" ")]
             for linea in volcado.read_text(encoding="utf-8").splitlines()]
    assert filas == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert len(_csv(capsys.readouterr().out)) == 3


# ------------------------------------------------------------------
# predict
# ------------------------------------------------------------------

def test_predict_lel_harary(capsys):
    assert main(["predict", "--weight", "harary", "--n", "1000", "--p", "0.5",
                 "--quantity", "LEL_f"]) == 0
    prediccion = json.loads(capsys.readouterr().out)
    assert prediccion["quantity"] == "LEL_f"
    assert prediccion["value"] == pytest.approx(27386.13, abs=0.01)


def test_predict_todas_las_cantidades(capsys):
    assert main(["predict", "--n", "400", "--p", "0.5"]) == 0
    predicciones = json.loads(capsys.readouterr().out)
    assert [d["quantity"] for d in predicciones] == [
        "E_adj", "E_Wf", "LE_f", "LE_plus_f", "LEL_f", "IE_f",
    ]


def test_predict_tabla(capsys):
    assert main(["predict", "--table", "--n", "400", "--p", "0.5"]) == 0
    filas = _csv(capsys.readouterr().out)
    pesos = {fila["weight"] for fila in filas}
    assert {"harary", "gutman", "unweighted"} <= pesos
    gutman = next(fila for fila in filas if fila["weight"] == "gutman")
    assert gutman["exact"] == "true"
    assert float(gutman["relative_difference"]) < 1e-9


# ------------------------------------------------------------------
# esd and sweep
# ------------------------------------------------------------------

def test_esd_cuenta_todos(capsys):
    assert main(["esd", "--n", "100", "--p", "0.5", "--bins", "10"]) == 0
    filas = _csv(capsys.readouterr().out)
    assert len(filas) == 10
    assert sum(int(fila["count"]) for fila in filas) == 100


def test_esd_sin_perron(capsys):
    assert main(["esd", "--n", "100", "--p", "0.5", "--bins", "8", "--scale", "wigner",
                 "--drop-largest", "1", "--format", "json"]) == 0
    datos = json.loads(capsys.readouterr().out)
    assert sum(datos["counts"]) == 99
    assert datos["scaling"] == "wigner"


def test_sweep(tmp_path, capsys):
    configuracion = tmp_path / "barrido.toml"
    configuracion.write_text(
        'weights = ["unweighted"]\nn_values = [30]\np = 0.5\ntrials = 2\nmaster_seed = 4\n'
        'quantities = ["LE_f", "LEL_f"]\n',
        encoding="utf-8",
    )
    salida = tmp_path / "barrido.csv"
    assert main(["sweep", "--config", str(configuracion), "--jobs", "1",
                 "--out", str(salida)]) == 0
    filas = _csv(salida.read_text(encoding="utf-8"))
    assert len(filas) == 4
    assert {fila["quantity"] for fila in filas} == {"LE_f", "LEL_f"}


def test_sweep_configuracion_invalida(tmp_path):
    configuracion = tmp_path / "malo.toml"
    configuracion.write_text('weights = ["wiener"]\nn_values = [30]\np = 0.5\ntrials = 2\n'
                             'master_seed = 4\n', encoding="utf-8")
    assert main(["sweep", "--config", str(configuracion)]) == 2


# ------------------------------------------------------------------
# Exit codes
# ------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["gen", "--n", "5", "--p", "1.5"],
    ["gen", "--n", "5"],
    ["energy", "--n", "5", "--p", "0.5", "--weight", "wiener"],
    ["energy", "--graph", "no_existe.txt"],
    ["predict", "--n", "1", "--p", "0.5"],
    ["frobnicate"],
    [],
])
def test_errores_de_uso(argv):
    assert main(argv) == 2


def test_ayuda_sale_con_cero(capsys):
    assert main(["--help"]) == 0
    assert "graph-energy" in capsys.readouterr().out


def test_archivo_de_log(tmp_path, capsys):
    registro = tmp_path / "logs" / "run.log"
    assert main(["gen", "--n", "4", "--p", "1", "--log-file", str(registro)]) == 0
    assert "G(4, 1.0)" in registro.read_text(encoding="utf-8")
