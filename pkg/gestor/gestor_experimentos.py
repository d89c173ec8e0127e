"""
Experiment Manager - Graph Energy Toolkit

This module implements the GestorExperimentos class which runs Monte Carlo
sweeps over (weight x n) cells: it samples G(n, p), measures the energies,
compares them with the asymptotic predictions and aggregates the trials
into a batch verdict.

Trials are independent: trial t of cell c always uses the seed
mezclar_semilla(master_seed, c, t), resampling r >= 1 uses
mezclar_semilla(master_seed, c, t, r), and records are sorted by
(cell, trial) before output. Results therefore do not depend on the
number of worker processes.

Classes:
    GestorExperimentos: Sweep runner, conjecture check and structure audit
"""

import copy
import logging
import math
import time
from multiprocessing import Pool, cpu_count

import numpy as np

from algoritmos_espectrales.energias import (
    energia,
    espectros_ponderados,
    reporte_desde_espectros,
)
from algoritmos_espectrales.matrices import construir_adyacencia_ponderada, contexto_para
from algoritmos_espectrales.valores_propios import (
    fraccion_bulto,
    radio_sin_perron,
    valores_propios_simetricos,
)
from algoritmos_grafos.busqueda_anchura import bfs_todos_los_pares
from algoritmos_grafos.estadisticas import estadisticas_grafo, grados_en_ventana
from algoritmos_grafos.generacion import generar_gnp
from config import (
    APP_NAME,
    APP_VERSION,
    CANTIDADES,
    COLUMNAS_CSV,
    MAX_REINTENTOS,
    UMBRAL_BULTO,
)
from models.reportes import EntradaVeredicto, Prediccion, RegistroEnsayo, VeredictoLote
from pesos.registro_pesos import obtener_peso
from predictores.asintoticos import clasificar_caso, predecir, predecir_bulto
from utils.excepciones import DesconexionError, DominioPesoError
from utils.semillas import mezclar_semilla

logger = logging.getLogger("GraphEnergy.experimentos")


def muestrear_conexo(n, p, semilla_maestra, celda, ensayo, remuestrear, necesita_conexion):
    """
    Sample G(n, p) for one trial, resampling disconnected graphs if allowed.

    Args:
        n (int): Vertex count
        p (float): Edge probability
        semilla_maestra (int): Master seed
        celda (int): Cell index
        ensayo (int): Trial index
        remuestrear (bool): Resample until connected
        necesita_conexion (bool): The weight needs finite distances

    Returns:
        tuple: (grafo, distancias, semilla, reintentos)

    Raises:
        DesconexionError: Disconnected sample that may not (or could not) be replaced
    """
    semilla = mezclar_semilla(semilla_maestra, celda, ensayo)
    reintentos = 0
    while True:
        grafo = generar_gnp(n, p, semilla)
        distancias = bfs_todos_los_pares(grafo)
        if distancias.es_conexo() or not necesita_conexion:
            return grafo, distancias, semilla, reintentos
        if not remuestrear:
            raise DesconexionError(f"sample with seed {semilla} is disconnected")

        reintentos += 1
        if reintentos >= MAX_REINTENTOS:
            raise DesconexionError(
                f"no connected sample after {MAX_REINTENTOS} attempts", politica="a larger p"
            )
        logger.debug("cell %d trial %d: disconnected sample, retry %d", celda, ensayo, reintentos)
        semilla = mezclar_semilla(semilla_maestra, celda, ensayo, reintentos)


def ejecutar_ensayo(tarea):
    """
    Run one trial. Module-level so worker processes can unpickle it.

    Args:
        tarea (tuple): (cell, trial, weight name, alpha, n, p, master seed,
            resample flag, quantities, bulk tolerance)

    Returns:
        RegistroEnsayo: Record, flagged as failed instead of raising
    """
    celda, ensayo, nombre, alpha, n, p, semilla_maestra, remuestrear, cantidades, tol_bulto = tarea
    peso = obtener_peso(nombre, alpha)

    try:
        grafo, distancias, semilla, reintentos = muestrear_conexo(
            n, p, semilla_maestra, celda, ensayo, remuestrear, peso.depende_de_distancia
        )
    except DesconexionError as e:
        logger.warning("cell %d trial %d (%s, n=%d): %s", celda, ensayo, nombre, n, e)
        return RegistroEnsayo(nombre, n, p, celda, ensayo,
                              mezclar_semilla(semilla_maestra, celda, ensayo),
                              reintentos=MAX_REINTENTOS if remuestrear else 0,
                              fallido=True, motivo=str(e))

    ctx = contexto_para(grafo, distancias)
    meta = {"weight": nombre, "n": n, "p": p, "seed": semilla}
    try:
        espectro_W, espectro_L, espectro_L_plus, media = espectros_ponderados(
            grafo, distancias, peso, ctx, meta
        )
        empiricos = reporte_desde_espectros(espectro_W, espectro_L, espectro_L_plus, media).cantidades()
        if "E_adj" in cantidades:
            A_f = construir_adyacencia_ponderada(grafo, distancias, peso, ctx)
            empiricos["E_adj"] = energia(valores_propios_simetricos(A_f, meta))
    except DominioPesoError as e:
        logger.warning("cell %d trial %d (%s, n=%d): %s", celda, ensayo, nombre, n, e)
        return RegistroEnsayo(nombre, n, p, celda, ensayo, semilla, ctx.diametro, reintentos,
                              fallido=True, motivo=str(e))

    if nombre == "unweighted":
        radio_sin_perron(espectro_W)

    predicciones = {}
    for cantidad in cantidades:
        try:
            predicciones[cantidad] = predecir(peso, n, p, cantidad)
        except DominioPesoError as e:
            predicciones[cantidad] = Prediccion.indeterminada(cantidad, "domain", str(e))

    try:
        _, arriba, abajo = clasificar_caso(peso, n, p, "L_f")
        centro = predecir_bulto(peso, n, p)
        bulto = fraccion_bulto(espectro_L, centro, tol_bulto, (arriba, abajo)) if centro else None
    except DominioPesoError:
        bulto = None

    return RegistroEnsayo(
        nombre, n, p, celda, ensayo, semilla,
        diametro=ctx.diametro,
        reintentos=reintentos,
        empiricos={c: empiricos[c] for c in cantidades},
        predicciones=predicciones,
        fraccion_bulto=bulto,
    )


class GestorExperimentos:
    """
    Manager class for Monte Carlo experiments.

    This class handles:
    - Sweeps over weights x n_values with parallel trials
    - Batch verdicts against point predictions and brackets
    - The Laplacian-dominance check LE_f > E(W_f)
    - The degree-window and diameter-2 audit
    - CSV and JSON export of records and verdicts

    Attributes:
        archivo_handler: Utility for file operations
        trabajos (int): Worker processes (1 runs in-process)
    """

    def __init__(self, archivo_handler, trabajos=None):
        """
        Initialize the experiment manager.

        Args:
            archivo_handler: ArchivoHandler instance
            trabajos (int, optional): Worker processes. Defaults to cpu_count().
        """
        self.archivo_handler = archivo_handler
        self.trabajos = max(1, int(trabajos or cpu_count()))

    def _mapear(self, funcion, tareas):
        if self.trabajos == 1 or len(tareas) <= 1:
            return [funcion(tarea) for tarea in tareas]
        with Pool(min(self.trabajos, len(tareas))) as pool:
            return pool.map(funcion, tareas, chunksize=1)

    def ejecutar_barrido(self, cfg):
        """
        Run every trial of a sweep.

        Args:
            cfg (ConfiguracionBarrido): Validated configuration

        Returns:
            tuple: (list of RegistroEnsayo sorted by (cell, trial), VeredictoLote)
        """
        tareas = [
            (celda, ensayo, peso, cfg.alpha, n, cfg.p, cfg.semilla_maestra,
             cfg.remuestrear_desconectados, cfg.cantidades, cfg.tolerancia_bulto)
            for celda, peso, n in cfg.celdas()
            for ensayo in range(cfg.ensayos)
        ]
        logger.info("sweep: %d cells x %d trials on %d worker(s)",
                    len(cfg.celdas()), cfg.ensayos, self.trabajos)

        inicio = time.perf_counter()
        registros = sorted(self._mapear(ejecutar_ensayo, tareas), key=lambda r: r.clave)
        logger.info("sweep finished in %.1f s", time.perf_counter() - inicio)

        return registros, self.construir_veredicto(registros, cfg)

    def construir_veredicto(self, registros, cfg):
        """
        Aggregate records per (weight, n, quantity).

        A point prediction passes when the mean ratio is within
        [1 - tolerance, 1 + tolerance]; a bracket passes when the mean
        empirical value is within [lower (1 - slack), upper (1 + slack)].
        A cell without any successful trial fails.

        Args:
            registros (list): Records of the sweep
            cfg (ConfiguracionBarrido): Configuration with the tolerances

        Returns:
            VeredictoLote: Aggregates and bulk pass rates
        """
        entradas = []
        tasas_bulto = {}
        for _, peso, n in cfg.celdas():
            propios = [r for r in registros if r.peso == peso and r.n == n]
            buenos = [r for r in propios if not r.fallido]
            fallidos = len(propios) - len(buenos)

            for cantidad in cfg.cantidades:
                entradas.append(self._entrada(peso, n, cantidad, buenos, fallidos, cfg))

            bultos = [r.fraccion_bulto for r in buenos if r.fraccion_bulto is not None]
            if bultos:
                tasas_bulto[(peso, n)] = sum(b >= UMBRAL_BULTO for b in bultos) / len(bultos)

        return VeredictoLote(entradas, tasas_bulto)

    def _entrada(self, peso, n, cantidad, buenos, fallidos, cfg):
        if not buenos:
            return EntradaVeredicto(peso, n, cantidad, 0, fallidos, aprobado=False)

        prediccion = buenos[0].predicciones[cantidad]
        empiricos = np.array([r.empiricos[cantidad] for r in buenos])
        media_empirica = float(empiricos.mean())

        razones = [r.razon(cantidad) for r in buenos]
        if prediccion.es_puntual and None not in razones:
            razones = np.array(razones, dtype=np.float64)
            media = float(razones.mean())
            desviacion = float(razones.std(ddof=1)) if razones.size > 1 else 0.0
            return EntradaVeredicto(
                peso, n, cantidad, len(buenos), fallidos,
                razon_media=media, desviacion=desviacion, empirico_medio=media_empirica,
                aprobado=abs(media - 1) <= cfg.tolerancia,
            )

        if prediccion.intervalo is not None:
            inferior, superior = prediccion.intervalo
            aprobado = (inferior * (1 - cfg.holgura_intervalo) <= media_empirica
                        <= superior * (1 + cfg.holgura_intervalo))
            return EntradaVeredicto(
                peso, n, cantidad, len(buenos), fallidos,
                empirico_medio=media_empirica, intervalo=prediccion.intervalo, aprobado=aprobado,
            )

        return EntradaVeredicto(peso, n, cantidad, len(buenos), fallidos,
                                empirico_medio=media_empirica)

    def verificar_conjetura(self, cfg):
        """
        Fraction of trials where LE_f strictly exceeds E(W_f).

        Failed trials count as failures.

        Args:
            cfg (ConfiguracionBarrido): Configuration; a copy with E_Wf and LE_f
                added to its quantities is run, cfg itself is left untouched

        Returns:
            float: Pass rate in [0, 1]
        """
        if not {"E_Wf", "LE_f"} <= set(cfg.cantidades):
            pedidas = set(cfg.cantidades) | {"E_Wf", "LE_f"}
            cfg = copy.copy(cfg)
            cfg.cantidades = tuple(c for c in CANTIDADES if c in pedidas)
        registros, _ = self.ejecutar_barrido(cfg)
        return tasa_dominancia(registros)

    def auditoria_grado_diametro(self, n, p, ensayos, semilla_maestra):
        """
        Degree-window and diameter-2 pass rates over independent samples.

        A sample passes the degree check when every degree lies in
        (np - n^(3/4), np + n^(3/4)). Nothing is asserted here; small n
        only gets a warning.

        Args:
            n (int): Vertex count
            p (float): Edge probability
            ensayos (int): Number of samples
            semilla_maestra (int): Master seed

        Returns:
            dict: 'degree_rate', 'diameter_rate' and 'trials'
        """
        if n < 50:
            logger.warning("structure audit at n=%d: the asymptotic statements need larger n", n)

        en_ventana = diametro_dos = 0
        for ensayo in range(ensayos):
            grafo = generar_gnp(n, p, mezclar_semilla(semilla_maestra, 0, ensayo))
            estadisticas = estadisticas_grafo(grafo, bfs_todos_los_pares(grafo))
            en_ventana += grados_en_ventana(estadisticas, n, p)
            diametro_dos += estadisticas.diametro == 2

        return {
            "degree_rate": en_ventana / ensayos,
            "diameter_rate": diametro_dos / ensayos,
            "trials": ensayos,
        }

    def comentario(self, cfg):
        """
        Metadata line of the sweep CSV (no timestamps, so output stays byte-identical).

        Returns:
            str: Text without the leading '#'
        """
        return (f"{APP_NAME} {APP_VERSION} sweep weights={','.join(cfg.pesos)} "
                f"n={','.join(map(str, cfg.valores_n))} p={cfg.p!r} trials={cfg.ensayos} "
                f"master_seed={cfg.semilla_maestra} tolerance={cfg.tolerancia!r} "
                f"bracket_slack={cfg.holgura_intervalo!r} bulk_tolerance={cfg.tolerancia_bulto!r} "
                f"(tolerances are engineering choices)")

    def registros_a_csv(self, registros, cfg):
        """
        Records as CSV text in the sweep schema.

        Returns:
            str: Header comment, header row and one row per (trial, quantity)
        """
        filas = [fila for r in registros for fila in r.a_filas(cfg.cantidades)]
        return self.archivo_handler.csv_a_texto(filas, COLUMNAS_CSV, self.comentario(cfg))

    def registros_a_json(self, registros, veredicto, cfg):
        """
        Records and verdict as a JSON document.

        Returns:
            dict: config, records and verdict
        """
        return {
            "meta": self.comentario(cfg),
            "config": cfg.to_dict(),
            "records": [r.to_dict() for r in registros],
            "verdict": veredicto.to_dict(),
        }

    def guardar_resultados(self, registros, veredicto, cfg, ruta=None, formato="csv"):
        """
        Write sweep results to a file or stdout.

        Args:
            registros (list): Records
            veredicto (VeredictoLote): Batch verdict
            cfg (ConfiguracionBarrido): Configuration
            ruta (str, optional): Destination; stdout when None
            formato (str, optional): "csv" or "json". Defaults to "csv".

        Returns:
            dict: Result with 'exito' (bool) and 'mensaje' (str)
        """
        if formato == "json":
            self.archivo_handler.guardar_json(ruta, self.registros_a_json(registros, veredicto, cfg))
        else:
            self.archivo_handler.escribir_texto(ruta, self.registros_a_csv(registros, cfg))

        fallidos = sum(r.fallido for r in registros)
        return {
            'exito': True,
            'mensaje': f"{len(registros)} trial(s) written ({fallidos} failed)",
        }



def margen(registro):
    """LE_f - E(W_f) of a record, None when the trial failed."""
    if registro.fallido:
        return None
    return registro.empiricos["LE_f"] - registro.empiricos["E_Wf"]


def tasa_dominancia(registros):
    """
    Fraction of records with a strictly positive LE_f - E(W_f) margin.

    Args:
        registros (list): Records measuring E_Wf and LE_f

    Returns:
        float: Pass rate (0.0 for no records)
    """
    if not registros:
        return 0.0
    positivos = 0
    for registro in registros:
        valor = margen(registro)
        positivos += valor is not None and math.isfinite(valor) and valor > 0
    return positivos / len(registros)
