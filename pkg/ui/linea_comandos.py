"""
Command Line - Graph Energy Toolkit

This module implements the `graph-energy` command line: the only process
entry point of the toolkit. Data goes to stdout (or --out), logs go to
stderr (and --log-file).

Subcommands:
    gen       Sample G(n, p) and write its edge list
    spectrum  Descending spectrum of A, L, L+, Wf, Af, Lf or Lf+
    energy    Energy report of a weighted graph
    predict   Asymptotic predictions (or the index table with --table)
    sweep     Monte Carlo sweep from a TOML configuration
    verify    Acceptance battery (--fast runs at a reduced n)
    esd       Histogram of the empirical spectral distribution

Exit codes:
    0 success, 2 usage or configuration error, 3 domain error,
    4 verification failure

Classes:
    AplicacionLineaComandos: Dispatches one parsed invocation
"""

import argparse
import logging
import sys

from algoritmos_espectrales.energias import reporte_completo
from algoritmos_espectrales.matrices import NOMBRES_MATRIZ, construir_por_nombre, volcar_matriz
from algoritmos_espectrales.valores_propios import (
    ESCALAS,
    histograma_esd,
    valores_propios_simetricos,
)
from algoritmos_grafos.busqueda_anchura import bfs_todos_los_pares
from algoritmos_grafos.generacion import generar_gnp
from algoritmos_grafos.lista_aristas import escribir_lista_aristas, leer_lista_aristas
from config import (
    APP_NAME,
    APP_TITLE,
    APP_VERSION,
    CANTIDADES,
    MAX_REINTENTOS,
    SALIDA_DOMINIO,
    SALIDA_OK,
    SALIDA_USO,
    SALIDA_VERIFICACION,
    configurar_logging,
)
from gestor.gestor_experimentos import GestorExperimentos
from gestor.gestor_verificacion import GestorVerificacion
from models.configuracion_barrido import cargar_configuracion
from pesos.registro_pesos import obtener_peso, registro
from predictores.asintoticos import fila_tabla, predecir
from utils.archivo_handler import ArchivoHandler
from utils.excepciones import (
    ConfiguracionError,
    DesconexionError,
    DominioPesoError,
    PesoNoAplicableError,
)
from utils.semillas import mezclar_semilla

logger = logging.getLogger("GraphEnergy.cli")

COLUMNAS_TABLA = ("weight", "formula", "limit_class", "table_term", "predicted",
                  "relative_difference", "exact")


def _opciones_comunes():
    """Flags accepted by every subcommand."""
    comunes = argparse.ArgumentParser(add_help=False)
    comunes.add_argument("--out", default=None, help="output file (default: stdout)")
    comunes.add_argument("--format", choices=("csv", "json"), default=None,
                         help="output format")
    comunes.add_argument("--jobs", type=int, default=None,
                         help="worker processes (default: available cores)")
    comunes.add_argument("--verbose", action="store_true", help="debug logging")
    comunes.add_argument("--log-file", default=None, help="also write logs to this file")
    return comunes


def _opciones_grafo(parser, con_archivo=True):
    if con_archivo:
        parser.add_argument("--graph", default=None, help="edge-list file")
    parser.add_argument("--n", type=int, default=None, help="vertex count")
    parser.add_argument("--p", type=float, default=None, help="edge probability")
    parser.add_argument("--seed", type=int, default=0, help="64-bit seed")


def _opciones_peso(parser):
    parser.add_argument("--weight", default="unweighted", help="weight identifier")
    parser.add_argument("--alpha", type=float, default=None,
                        help="exponent of general_randic")


def construir_parser():
    """
    Build the argument parser.

    Returns:
        argparse.ArgumentParser: Parser with one subparser per subcommand
    """
    comunes = _opciones_comunes()
    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description=f"{APP_TITLE} {APP_VERSION}: energies of weighted G(n, p) matrices",
    )
    subparsers = parser.add_subparsers(dest="subcomando", required=True)

    gen = subparsers.add_parser("gen", parents=[comunes], help="sample G(n, p)")
    _opciones_grafo(gen, con_archivo=False)

    spectrum = subparsers.add_parser("spectrum", parents=[comunes], help="matrix spectrum")
    _opciones_grafo(spectrum)
    _opciones_peso(spectrum)
    spectrum.add_argument("--matrix", choices=NOMBRES_MATRIZ, default="A")
    spectrum.add_argument("--resample", action="store_true",
                          help="resample generated graphs until connected")
    spectrum.add_argument("--dump", metavar="RUTA",
                          help="also write the matrix as plain text rows to RUTA")

    energy = subparsers.add_parser("energy", parents=[comunes], help="energy report")
    _opciones_grafo(energy)
    _opciones_peso(energy)
    energy.add_argument("--resample", action="store_true",
                        help="resample generated graphs until connected")

    predict = subparsers.add_parser("predict", parents=[comunes], help="asymptotic predictions")
    _opciones_peso(predict)
    predict.add_argument("--n", type=int, required=True)
    predict.add_argument("--p", type=float, required=True)
    predict.add_argument("--quantity", choices=CANTIDADES, default=None,
                         help="single quantity (default: all)")
    predict.add_argument("--table", action="store_true",
                         help="index table terms against the predictor")

    sweep = subparsers.add_parser("sweep", parents=[comunes], help="Monte Carlo sweep")
    sweep.add_argument("--config", required=True, help="TOML sweep configuration")

    verify = subparsers.add_parser("verify", parents=[comunes], help="acceptance battery")
    verify.add_argument("--fast", action="store_true", help="run at n = 200 with widened bands")

    esd = subparsers.add_parser("esd", parents=[comunes], help="spectral histogram")
    _opciones_grafo(esd)
    _opciones_peso(esd)
    esd.add_argument("--matrix", choices=NOMBRES_MATRIZ, default="A")
    esd.add_argument("--bins", type=int, default=40)
    esd.add_argument("--scale", choices=ESCALAS, default="none")
    esd.add_argument("--drop-largest", type=int, default=0,
                     help="leave out the k largest eigenvalues")
    esd.add_argument("--resample", action="store_true",
                     help="resample generated graphs until connected")

    return parser


class AplicacionLineaComandos:
    """
    Runs one parsed command-line invocation.

    Attributes:
        args (argparse.Namespace): Parsed arguments
        archivo_handler (ArchivoHandler): Output writer
    """

    def __init__(self, args, archivo_handler=None):
        self.args = args
        self.archivo_handler = archivo_handler or ArchivoHandler()

    def ejecutar(self):
        """
        Dispatch to the subcommand.

        Returns:
            int: Exit code
        """
        acciones = {
            "gen": self.generar,
            "spectrum": self.espectro,
            "energy": self.energia,
            "predict": self.predecir,
            "sweep": self.barrido,
            "verify": self.verificar,
            "esd": self.esd,
        }
        return acciones[self.args.subcomando]()

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------

    def _formato(self, defecto):
        return self.args.format or defecto

    def _peso(self):
        return obtener_peso(self.args.weight, self.args.alpha)

    def _grafo(self, peso=None):
        """
        Graph from --graph, or sampled from --n --p --seed.

        A disconnected sample is replaced (seed mixed with the retry index)
        only under --resample and only when the weight needs distances.

        Returns:
            tuple: (Grafo, TablaDistancias, seed or None)
        """
        if getattr(self.args, "graph", None):
            grafo = leer_lista_aristas(self.archivo_handler.leer_texto(self.args.graph))
            return grafo, bfs_todos_los_pares(grafo), None

        if self.args.n is None or self.args.p is None:
            raise ConfiguracionError("either --graph or both --n and --p are required")

        necesita_conexion = peso is not None and peso.depende_de_distancia
        remuestrear = getattr(self.args, "resample", False)
        semilla = self.args.seed
        for reintento in range(MAX_REINTENTOS):
            if reintento:
                semilla = mezclar_semilla(self.args.seed, reintento)
            grafo = generar_gnp(self.args.n, self.args.p, semilla)
            distancias = bfs_todos_los_pares(grafo)
            if distancias.es_conexo() or not necesita_conexion or not remuestrear:
                if reintento:
                    logger.info("connected sample after %d retries (seed %d)", reintento, semilla)
                return grafo, distancias, semilla
        raise DesconexionError(f"no connected sample after {MAX_REINTENTOS} attempts",
                               politica="a larger p")

    def _espectro_pedido(self):
        peso = self._peso()
        grafo, distancias, semilla = self._grafo(peso if self.args.matrix in ("Wf", "Af", "Lf", "Lf+")
                                                 else None)
        matriz = construir_por_nombre(self.args.matrix, grafo, distancias, peso)
        if getattr(self.args, "dump", None):
            self.archivo_handler.escribir_texto(self.args.dump, volcar_matriz(matriz))
            logger.info("%s matrix written to %s", self.args.matrix, self.args.dump)
        meta = {"matrix": self.args.matrix, "weight": peso.nombre, "n": grafo.n}
        if semilla is not None:
            meta.update(p=self.args.p, seed=semilla)
        return valores_propios_simetricos(matriz, meta)

    def _comentario(self, espectro):
        return " ".join(f"{clave}={valor}" for clave, valor in espectro.meta.items())

    # ------------------------------------------------------------------
    # Subcommands
    # ------------------------------------------------------------------

    def generar(self):
        """gen: edge list of a G(n, p) sample."""
        if self.args.n is None or self.args.p is None:
            raise ConfiguracionError("gen needs --n and --p")
        grafo = generar_gnp(self.args.n, self.args.p, self.args.seed)
        self.archivo_handler.escribir_texto(self.args.out, escribir_lista_aristas(grafo))
        logger.info("G(%d, %r) seed %d: %d edges", grafo.n, self.args.p, self.args.seed, grafo.m)
        return SALIDA_OK

    def espectro(self):
        """
        spectrum: descending eigenvalues as CSV (index,value) or JSON.

        With --dump the matrix itself is also written as plain text rows.
        """
        espectro = self._espectro_pedido()
        if self._formato("csv") == "json":
            self.archivo_handler.guardar_json(self.args.out, espectro.to_dict())
        else:
            self.archivo_handler.guardar_csv(self.args.out, espectro.a_filas(),
                                             ("index", "value"), self._comentario(espectro))
        return SALIDA_OK

    def energia(self):
        """energy: the five energies of W_f, L_f and L_f+."""
        peso = self._peso()
        grafo, distancias, semilla = self._grafo(peso)
        meta = {} if semilla is None else {"p": self.args.p, "seed": semilla}
        reporte = reporte_completo(grafo, peso, distancias=distancias, meta=meta)

        if self._formato("json") == "csv":
            fila = {campo: getattr(reporte, campo) for campo in reporte.CAMPOS}
            self.archivo_handler.guardar_csv(self.args.out, [fila], reporte.CAMPOS,
                                             " ".join(f"{k}={v}" for k, v in reporte.meta.items()))
        else:
            self.archivo_handler.guardar_json(self.args.out, reporte.to_dict())
        return SALIDA_OK

    def predecir(self):
        """predict: predictions for one weight, or the index table."""
        n, p = self.args.n, self.args.p
        if self.args.table:
            filas = []
            for peso in registro(self.args.alpha):
                try:
                    filas.append(fila_tabla(peso, n, p))
                except DominioPesoError as e:
                    logger.warning("%s: %s", peso.nombre, e)
            if self._formato("csv") == "json":
                self.archivo_handler.guardar_json(self.args.out, filas)
            else:
                self.archivo_handler.guardar_csv(self.args.out, filas, COLUMNAS_TABLA,
                                                 f"index table n={n} p={p!r}")
            return SALIDA_OK

        peso = self._peso()
        cantidades = [self.args.quantity] if self.args.quantity else list(CANTIDADES)
        predicciones = [predecir(peso, n, p, cantidad).to_dict() for cantidad in cantidades]
        datos = predicciones[0] if self.args.quantity else predicciones

        if self._formato("json") == "csv":
            filas = [_fila_prediccion(d) for d in predicciones]
            self.archivo_handler.guardar_csv(
                self.args.out, filas, ("quantity", "value", "lower", "upper", "source", "reason"),
                f"weight={peso.nombre} n={n} p={p!r}",
            )
        else:
            self.archivo_handler.guardar_json(self.args.out, datos)
        return SALIDA_OK

    def barrido(self):
        """sweep: Monte Carlo sweep from a configuration file."""
        cfg = cargar_configuracion(self.archivo_handler.leer_texto(self.args.config))
        gestor = GestorExperimentos(self.archivo_handler, self.args.jobs)
        registros, veredicto = gestor.ejecutar_barrido(cfg)
        resultado = gestor.guardar_resultados(registros, veredicto, cfg, self.args.out,
                                              self._formato("csv"))
        logger.info("%s", resultado['mensaje'])
        for linea in str(veredicto).splitlines():
            logger.info("%s", linea)
        return SALIDA_OK

    def verificar(self):
        """verify: acceptance battery; exit 4 when any check fails."""
        gestor = GestorExperimentos(self.archivo_handler, self.args.jobs)
        verificacion = GestorVerificacion(gestor, rapido=self.args.fast)
        resultados = verificacion.ejecutar()

        if self._formato("csv") == "json":
            self.archivo_handler.guardar_json(self.args.out, [r.a_fila() for r in resultados])
        else:
            self.archivo_handler.escribir_texto(
                self.args.out, verificacion.a_csv(resultados, self.archivo_handler)
            )

        fallidos = [r for r in resultados if not r.aprobado]
        if fallidos:
            logger.error("%d of %d checks failed", len(fallidos), len(resultados))
            return SALIDA_VERIFICACION
        logger.info("all %d checks passed", len(resultados))
        return SALIDA_OK

    def esd(self):
        """esd: histogram of the scaled spectrum as CSV (bin_left,bin_right,count)."""
        espectro = self._espectro_pedido()
        histograma = histograma_esd(espectro, self.args.bins, self.args.scale, self.args.p,
                                    descartar_mayores=self.args.drop_largest)
        if self._formato("csv") == "json":
            self.archivo_handler.guardar_json(self.args.out, histograma.to_dict())
        else:
            self.archivo_handler.guardar_csv(
                self.args.out, histograma.a_filas(), ("bin_left", "bin_right", "count"),
                f"{self._comentario(espectro)} scale={self.args.scale} bins={self.args.bins}",
            )
        return SALIDA_OK


def _fila_prediccion(datos):
    """Flatten a prediction dictionary into a CSV row."""
    intervalo = datos.get("bracket") or (None, None)
    valor = datos.get("value")
    return {
        "quantity": datos["quantity"],
        "value": valor,
        "lower": intervalo[0],
        "upper": intervalo[1],
        "source": datos["source"],
        "reason": datos.get("reason"),
    }


def main(argv=None):
    """
    Parse the arguments, run the subcommand and map errors to exit codes.

    Args:
        argv (list, optional): Arguments without the program name.
            Defaults to sys.argv[1:].

    Returns:
        int: Exit code
    """
    parser = construir_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return SALIDA_OK if e.code in (0, None) else SALIDA_USO

    configurar_logging(args.verbose, args.log_file)

    try:
        return AplicacionLineaComandos(args).ejecutar()
    except (DesconexionError, DominioPesoError) as e:
        logger.error("%s", e)
        return SALIDA_DOMINIO
    except (ConfiguracionError, PesoNoAplicableError, ValueError) as e:
        logger.error("%s", e)
        return SALIDA_USO


if __name__ == "__main__":
    sys.exit(main())
