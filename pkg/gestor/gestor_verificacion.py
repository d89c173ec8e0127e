"""
Verification Manager - Graph Energy Toolkit

This module implements the acceptance battery run by `verify`: Monte Carlo
checks of the asymptotic formulas at n = 400 (n = 200 with --fast), exact
oracle suites for the eigensolver and metamorphic checks of the energies.

Finite-size widening: at a reduced n every band's distance from 1, the
bracket slack and the bulk tolerance are multiplied by sqrt(400 / n).

Classes:
    ResultadoComprobacion: Outcome of one check
    GestorVerificacion: Runs the battery
"""

import logging
import math

import numpy as np

from algoritmos_espectrales.energias import reporte_completo
from algoritmos_espectrales.matrices import (
    construir_distancia_ponderada,
    construir_familia_laplaciana,
    laplaciano_completo,
    laplaciano_sin_signo_completo,
)
from algoritmos_espectrales.oraculos import certificar_espectro, raices_caracteristicas
from algoritmos_espectrales.valores_propios import cotas_weyl, valores_propios_simetricos
from algoritmos_grafos.busqueda_anchura import bfs_todos_los_pares
from algoritmos_grafos.generacion import generar_gnp
from config import (
    HOLGURA_INTERVALO,
    N_RAPIDO,
    N_REFERENCIA,
    SEMILLA_VERIFICACION,
    TOL_VALORES_PROPIOS,
    TOLERANCIA_BULTO,
    UMBRAL_BULTO,
)
from models.configuracion_barrido import ConfiguracionBarrido
from pesos.registro_pesos import obtener_peso
from gestor.gestor_experimentos import tasa_dominancia
from utils.semillas import mezclar_semilla

logger = logging.getLogger("GraphEnergy.verificacion")

COLUMNAS_VERIFICACION = ("check", "passed", "value", "lower", "upper", "detail")

PESOS_LEL = ("first_zagreb", "randic", "harary", "hyper_wiener", "reverse_wiener",
             "degree_distance", "gutman", "add_harary")
PESOS_DOMINANCIA = ("unweighted", "harary", "hyper_wiener", "gutman")


class ResultadoComprobacion:
    """
    Outcome of one acceptance check.

    Attributes:
        nombre (str): Check identifier
        aprobado (bool): Pass/fail
        valor (float or None): Measured value
        inferior (float or None): Lower end of the accepted band
        superior (float or None): Upper end of the accepted band
        detalle (str): Human readable detail
    """

    def __init__(self, nombre, aprobado, valor=None, inferior=None, superior=None, detalle=""):
        self.nombre = nombre
        self.aprobado = bool(aprobado)
        self.valor = None if valor is None else float(valor)
        self.inferior = None if inferior is None else float(inferior)
        self.superior = None if superior is None else float(superior)
        self.detalle = detalle

    def a_fila(self):
        """dict: Row keyed by COLUMNAS_VERIFICACION."""
        return {
            "check": self.nombre,
            "passed": self.aprobado,
            "value": self.valor,
            "lower": self.inferior,
            "upper": self.superior,
            "detail": self.detalle,
        }

    def __str__(self):
        return f"{'PASS' if self.aprobado else 'FAIL'} {self.nombre}: {self.detalle}"


class GestorVerificacion:
    """
    Manager class for the acceptance battery.

    Attributes:
        gestor_experimentos: GestorExperimentos used for the sweeps
        rapido (bool): Reduced n with widened bands
        n (int): Vertex count of the Monte Carlo checks
        ensanche (float): sqrt(400 / n)
    """

    def __init__(self, gestor_experimentos, rapido=False, semilla_maestra=SEMILLA_VERIFICACION):
        """
        Initialize the verification manager.

        Args:
            gestor_experimentos: GestorExperimentos instance
            rapido (bool, optional): Run at n = 200. Defaults to False.
            semilla_maestra (int, optional): Master seed of every sweep
        """
        self.gestor_experimentos = gestor_experimentos
        self.rapido = rapido
        self.n = N_RAPIDO if rapido else N_REFERENCIA
        self.ensanche = math.sqrt(N_REFERENCIA / self.n)
        self.semilla_maestra = semilla_maestra

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------

    def banda(self, inferior, superior):
        """Widen [inferior, superior] around 1 by the finite-size factor."""
        return 1 - (1 - inferior) * self.ensanche, 1 + (superior - 1) * self.ensanche

    def _barrido(self, pesos, p, ensayos, cantidades):
        cfg = ConfiguracionBarrido(
            pesos=list(pesos),
            valores_n=[self.n],
            p=p,
            ensayos=ensayos,
            semilla_maestra=self.semilla_maestra,
            remuestrear_desconectados=True,
            cantidades=list(cantidades),
            holgura_intervalo=min(1.0, HOLGURA_INTERVALO * self.ensanche),
            tolerancia_bulto=min(1.0, TOLERANCIA_BULTO * self.ensanche),
        )
        registros, _ = self.gestor_experimentos.ejecutar_barrido(cfg)
        return registros

    def _razon_media(self, registros, peso, cantidad):
        razones = [r.razon(cantidad) for r in registros if r.peso == peso and not r.fallido]
        return float(np.mean(razones)) if razones and None not in razones else None

    def _puntual(self, nombre, registros, peso, cantidad, inferior, superior):
        bajo, alto = self.banda(inferior, superior)
        media = self._razon_media(registros, peso, cantidad)
        aprobado = media is not None and bajo <= media <= alto
        detalle = (f"{peso} {cantidad} mean ratio {media:.4f} in [{bajo:.4f}, {alto:.4f}]"
                   if media is not None else f"{peso} {cantidad}: no usable trial")
        return ResultadoComprobacion(nombre, aprobado, media, bajo, alto, detalle)

    def _intervalo(self, nombre, registros, peso, cantidad):
        propios = [r for r in registros if r.peso == peso and not r.fallido]
        if not propios:
            return ResultadoComprobacion(nombre, False, detalle=f"{peso} {cantidad}: no usable trial")

        prediccion = propios[0].predicciones[cantidad]
        if prediccion.intervalo is None:
            return ResultadoComprobacion(nombre, False, detalle=f"{peso} {cantidad}: no bracket")

        escala = self.n ** 1.5
        media = float(np.mean([r.empiricos[cantidad] for r in propios])) / escala
        inferior, superior = prediccion.intervalo
        holgura = HOLGURA_INTERVALO * self.ensanche
        bajo, alto = inferior / escala * (1 - holgura), superior / escala * (1 + holgura)
        return ResultadoComprobacion(
            nombre, bajo <= media <= alto, media, bajo, alto,
            f"{peso} {cantidad}/n^1.5 = {media:.4f} in [{bajo:.4f}, {alto:.4f}]",
        )

    # ------------------------------------------------------------------
    # Monte Carlo checks
    # ------------------------------------------------------------------

    def comprobar_muestreo(self):
        """
        Checks on G(n, 0.5) for the unweighted and the distance weights.

        Returns:
            list: ResultadoComprobacion for energy, LEL/IE, brackets,
                E(W_f), bulk and dominance at p = 0.5
        """
        registros = self._barrido(
            ("unweighted", "harary", "hyper_wiener", "gutman"), 0.5, 10,
            ("E_adj", "E_Wf", "LE_f", "LE_plus_f", "LEL_f", "IE_f"),
        )
        resultados = [
            self._puntual("energy_unweighted", registros, "unweighted", "E_adj", 0.90, 1.10),
            self._puntual("lel_unweighted", registros, "unweighted", "LEL_f", 0.95, 1.05),
            self._puntual("ie_unweighted", registros, "unweighted", "IE_f", 0.95, 1.05),
            self._intervalo("le_bracket_unweighted", registros, "unweighted", "LE_f"),
            self._intervalo("le_plus_bracket_unweighted", registros, "unweighted", "LE_plus_f"),
            self._intervalo("le_bracket_harary", registros, "harary", "LE_f"),
            self._intervalo("le_bracket_hyper_wiener", registros, "hyper_wiener", "LE_f"),
            self._puntual("energy_wf_harary", registros, "harary", "E_Wf", 0.85, 1.25),
            self._puntual("energy_wf_gutman", registros, "gutman", "E_Wf", 0.85, 1.25),
        ]

        for peso in ("unweighted", "harary"):
            propios = [r for r in registros if r.peso == peso and r.fraccion_bulto is not None]
            tasa = (sum(r.fraccion_bulto >= UMBRAL_BULTO for r in propios) / len(propios)
                    if propios else 0.0)
            tol = TOLERANCIA_BULTO * self.ensanche
            resultados.append(ResultadoComprobacion(
                f"bulk_{peso}", tasa >= UMBRAL_BULTO, tasa, UMBRAL_BULTO, 1.0,
                f"{peso}: {tasa:.2f} of trials keep >= {UMBRAL_BULTO} of L_f eigenvalues "
                f"within {tol:.3f} of the predicted bulk",
            ))

        resultados.extend(self._dominancia(registros, 0.5))
        return resultados

    def _dominancia(self, registros, p):
        resultados = []
        for peso in PESOS_DOMINANCIA:
            tasa = tasa_dominancia([r for r in registros if r.peso == peso])
            resultados.append(ResultadoComprobacion(
                f"dominance_{peso}_p{p}", tasa == 1.0, tasa, 1.0, 1.0,
                f"{peso} p={p}: LE_f > E(W_f) in {tasa:.2f} of trials",
            ))
        return resultados

    def comprobar_dominancia(self):
        """
        LE_f > E(W_f) in every trial at p = 0.3 and p = 0.7.

        Returns:
            list: One ResultadoComprobacion per (weight, p)
        """
        resultados = []
        for p in (0.3, 0.7):
            registros = self._barrido(PESOS_DOMINANCIA, p, 10, ("E_Wf", "LE_f"))
            resultados.extend(self._dominancia(registros, p))
        return resultados

    def comprobar_lel_ponderado(self):
        """
        Weighted LEL_f and IE_f against the limit-class formula.

        Returns:
            list: One ResultadoComprobacion per (weight, quantity)
        """
        registros = self._barrido(PESOS_LEL, 0.5, 5, ("LEL_f", "IE_f"))
        return [
            self._puntual(f"lel_ie_{peso}_{cantidad}", registros, peso, cantidad, 0.90, 1.10)
            for peso in PESOS_LEL
            for cantidad in ("LEL_f", "IE_f")
        ]

    def comprobar_estructura(self):
        """
        Degree window and diameter 2 over 20 samples of G(n, 0.5).

        Returns:
            list: Two ResultadoComprobacion
        """
        auditoria = self.gestor_experimentos.auditoria_grado_diametro(
            self.n, 0.5, 20, self.semilla_maestra
        )
        return [
            ResultadoComprobacion("degree_window", auditoria["degree_rate"] >= 0.95,
                                  auditoria["degree_rate"], 0.95, 1.0,
                                  f"{auditoria['degree_rate']:.2f} of samples in the degree window"),
            ResultadoComprobacion("diameter_two", auditoria["diameter_rate"] >= 0.95,
                                  auditoria["diameter_rate"], 0.95, 1.0,
                                  f"{auditoria['diameter_rate']:.2f} of samples have diameter 2"),
        ]

    # ------------------------------------------------------------------
    # Oracle and metamorphic checks
    # ------------------------------------------------------------------

    def comprobar_oraculos(self, sorteos=1000, pares_weyl=500):
        """
        Eigensolver against exact arithmetic, Weyl bounds and K_n spectra.

        Args:
            sorteos (int, optional): Random integer matrices. Defaults to 1000.
            pares_weyl (int, optional): Random (H, P) pairs. Defaults to 500.

        Returns:
            list: Three ResultadoComprobacion
        """
        rng = np.random.Generator(np.random.PCG64(mezclar_semilla(self.semilla_maestra, 1)))

        no_certificadas = 0
        error_raices = 0.0
        for _ in range(sorteos):
            n = int(rng.integers(1, 5))
            triangular = np.triu(rng.integers(-5, 6, size=(n, n)))
            matriz = triangular + np.triu(triangular, 1).T
            espectro = valores_propios_simetricos(matriz)
            if not certificar_espectro(matriz, espectro, 1e-8):
                no_certificadas += 1
            if n == 1 or np.min(-np.diff(espectro.valores)) > 1e-3:
                error_raices = max(error_raices, float(np.max(np.abs(
                    raices_caracteristicas(matriz) - espectro.valores))))

        violaciones = 0
        for _ in range(pares_weyl):
            n = int(rng.integers(2, 21))
            H = rng.standard_normal((n, n))
            P = rng.standard_normal((n, n))
            H, P = H + H.T, P + P.T
            inferior, superior = cotas_weyl(valores_propios_simetricos(H),
                                            valores_propios_simetricos(P))
            suma = valores_propios_simetricos(H + P).valores
            violaciones += int(np.sum((suma < inferior - 1e-8) | (suma > superior + 1e-8)))

        error_kn = 0.0
        for n in range(2, 31):
            esperado = np.array([float(n)] * (n - 1) + [0.0])
            esperado_sin_signo = np.array([2.0 * n - 2] + [n - 2.0] * (n - 1))
            error_kn = max(
                error_kn,
                float(np.max(np.abs(valores_propios_simetricos(laplaciano_completo(n)).valores
                                    - esperado))) / n,
                float(np.max(np.abs(valores_propios_simetricos(laplaciano_sin_signo_completo(n)).valores
                                    - esperado_sin_signo))) / n,
            )

        return [
            ResultadoComprobacion(
                "oracle_characteristic_polynomial", no_certificadas == 0, no_certificadas, 0, 0,
                f"{sorteos} integer matrices, {no_certificadas} not certified to 1e-8 "
                f"(separated roots differ by at most {error_raices:.2e})",
            ),
            ResultadoComprobacion(
                "oracle_weyl", violaciones == 0, violaciones, 0, 0,
                f"{pares_weyl} random pairs, {violaciones} violation(s) beyond 1e-8",
            ),
            ResultadoComprobacion(
                "oracle_complete_graph", error_kn <= TOL_VALORES_PROPIOS, error_kn, 0,
                TOL_VALORES_PROPIOS,
                f"K_n spectra, max relative error {error_kn:.2e}",
            ),
        ]

    def comprobar_metamorficas(self):
        """
        Scaling covariance, trace identity and sweep determinism.

        Returns:
            list: Three ResultadoComprobacion
        """
        grafo = generar_gnp(50, 0.5, mezclar_semilla(self.semilla_maestra, 2))
        distancias = bfs_todos_los_pares(grafo)

        error_escala = 0.0
        error_traza = 0.0
        for nombre in ("harary", "first_zagreb"):
            peso = obtener_peso(nombre)
            base = reporte_completo(grafo, peso, distancias=distancias)
            escalado = reporte_completo(grafo, peso.escalada(4), distancias=distancias)
            error_escala = max(
                error_escala,
                abs(escalado.laplacian_energy / base.laplacian_energy - 4) / 4,
                abs(escalado.lel / base.lel - 2) / 2,
            )

            W = construir_distancia_ponderada(grafo, distancias, peso)
            L_f, _, media = construir_familia_laplaciana(W)
            suma = valores_propios_simetricos(L_f).suma()
            error_traza = max(error_traza, abs(suma - grafo.n * media.valor) / (grafo.n * media.valor))

        cfg = ConfiguracionBarrido(["unweighted"], [50], 0.5, 2, self.semilla_maestra,
                                   cantidades=["LEL_f", "LE_f"])
        textos = [
            self.gestor_experimentos.registros_a_csv(
                self.gestor_experimentos.ejecutar_barrido(cfg)[0], cfg)
            for _ in range(2)
        ]

        return [
            ResultadoComprobacion("metamorphic_scaling", error_escala <= 1e-9, error_escala, 0, 1e-9,
                                  f"c=4 scaling, max relative error {error_escala:.2e}"),
            ResultadoComprobacion("metamorphic_trace", error_traza <= 1e-10, error_traza, 0, 1e-10,
                                  f"sum of L_f eigenvalues vs n * mean, {error_traza:.2e}"),
            ResultadoComprobacion("determinism", textos[0] == textos[1], None, None, None,
                                  "two identical sweeps produce identical CSV bytes"),
        ]

    # ------------------------------------------------------------------
    # Battery
    # ------------------------------------------------------------------

    def ejecutar(self):
        """
        Run the whole battery.

        Returns:
            list: ResultadoComprobacion in a fixed order
        """
        logger.info("verification at n=%d (%s)", self.n, "fast" if self.rapido else "full")
        resultados = []
        for paso in (self.comprobar_muestreo, self.comprobar_lel_ponderado,
                     self.comprobar_dominancia, self.comprobar_estructura,
                     self.comprobar_oraculos, self.comprobar_metamorficas):
            parciales = paso()
            for resultado in parciales:
                (logger.info if resultado.aprobado else logger.error)("%s", resultado)
            resultados.extend(parciales)
        return resultados

    def a_csv(self, resultados, archivo_handler):
        """
        Results as CSV text.

        Args:
            resultados (list): ResultadoComprobacion
            archivo_handler: ArchivoHandler used for rendering

        Returns:
            str: CSV with a '#' metadata line
        """
        comentario = (f"verify n={self.n} fast={'true' if self.rapido else 'false'} "
                      f"master_seed={self.semilla_maestra}")
        return archivo_handler.csv_a_texto([r.a_fila() for r in resultados],
                                           COLUMNAS_VERIFICACION, comentario)
