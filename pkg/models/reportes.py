"""
Report Models - Graph Energy Toolkit

This module defines the value objects produced by the energy pipeline,
the predictors and the experiment runner.

Classes:
    ReporteEnergia: The five energies of one weighted graph plus the weighted mean
    Prediccion: Asymptotic prediction (point value, bracket or INDETERMINATE)
    RegistroEnsayo: One Monte Carlo trial for one (weight, n, p, trial)
    EntradaVeredicto: Aggregate of one (weight, n, quantity) cell
    VeredictoLote: All aggregates of a sweep plus bulk pass rates

Constants:
    CANTIDADES: Quantity identifiers
"""

import math

from config import CANTIDADES
from utils.excepciones import ParametroInvalidoError


def _numero_json(valor):
    """JSON has no infinity: render non-finite floats as strings."""
    if valor is None:
        return None
    if isinstance(valor, float) and not math.isfinite(valor):
        return "inf" if valor > 0 else "-inf"
    return valor


class ReporteEnergia:
    """
    Energies of one weighted graph.

    Attributes:
        graph_energy (float): E(W_f), sum of |eigenvalues of W_f|
        laplacian_energy (float): LE_f, sum of |lambda_i(L_f) - mean|
        signless_laplacian_energy (float): LE+_f, same on L_f+
        lel (float): LEL_f, sum of sqrt|lambda_i(L_f)|
        ie (float): IE_f, sum of sqrt|lambda_i(L_f+)|
        weighted_mean (float): Weighted mean used by LE_f and LE+_f
        meta (dict): Provenance (weight, n, p, seed, diameter)
    """

    CAMPOS = (
        "graph_energy",
        "laplacian_energy",
        "signless_laplacian_energy",
        "lel",
        "ie",
        "weighted_mean",
    )

    def __init__(self, graph_energy, laplacian_energy, signless_laplacian_energy,
                 lel, ie, weighted_mean, meta=None):
        valores = (graph_energy, laplacian_energy, signless_laplacian_energy, lel, ie)
        for nombre, valor in zip(self.CAMPOS, valores):
            if not math.isfinite(valor) or valor < 0:
                raise ParametroInvalidoError(f"{nombre} must be finite and >= 0, got {valor}")

        self.graph_energy = float(graph_energy)
        self.laplacian_energy = float(laplacian_energy)
        self.signless_laplacian_energy = float(signless_laplacian_energy)
        self.lel = float(lel)
        self.ie = float(ie)
        self.weighted_mean = float(weighted_mean)
        self.meta = dict(meta or {})

    def cantidades(self):
        """
        Empirical values keyed by quantity identifier.

        Returns:
            dict: E_Wf, LE_f, LE_plus_f, LEL_f, IE_f
        """
        return {
            "E_Wf": self.graph_energy,
            "LE_f": self.laplacian_energy,
            "LE_plus_f": self.signless_laplacian_energy,
            "LEL_f": self.lel,
            "IE_f": self.ie,
        }

    def to_dict(self):
        """
        Flat JSON object with the spectral field names.

        Returns:
            dict: Energies, weighted mean and meta
        """
        datos = {campo: getattr(self, campo) for campo in self.CAMPOS}
        datos["meta"] = {clave: _numero_json(valor) for clave, valor in self.meta.items()}
        return datos

    @classmethod
    def from_dict(cls, datos):
        """
        Create a report from a dictionary.

        Args:
            datos (dict): Output of to_dict

        Returns:
            ReporteEnergia: New instance
        """
        return cls(
            datos["graph_energy"],
            datos["laplacian_energy"],
            datos["signless_laplacian_energy"],
            datos["lel"],
            datos["ie"],
            datos["weighted_mean"],
            datos.get("meta"),
        )

    def __repr__(self):
        return (f"ReporteEnergia(E={self.graph_energy:.6g}, LE={self.laplacian_energy:.6g}, "
                f"LE+={self.signless_laplacian_energy:.6g}, LEL={self.lel:.6g}, IE={self.ie:.6g})")


class Prediccion:
    """
    Asymptotic prediction of one quantity.

    Exactly one of `valor` (point) and `intervalo` (bracket) is set, unless
    the prediction is INDETERMINATE, in which case neither is and `motivo`
    explains why.

    Attributes:
        cantidad (str): One of CANTIDADES
        valor (float or None): Point value
        intervalo (tuple or None): (lower, upper) bracket
        fuente (str): Tag of the asymptotic formula used
        motivo (str or None): Reason for INDETERMINATE
    """

    def __init__(self, cantidad, valor=None, intervalo=None, fuente="", motivo=None):
        if cantidad not in CANTIDADES:
            raise ParametroInvalidoError(f"Unknown quantity {cantidad!r}")
        if valor is not None and not math.isfinite(valor):
            raise ParametroInvalidoError(f"Prediction for {cantidad} is not finite")
        if intervalo is not None:
            inferior, superior = (float(x) for x in intervalo)
            if inferior > superior:
                raise ParametroInvalidoError(f"Bracket lower {inferior} exceeds upper {superior}")
            intervalo = (inferior, superior)

        self.cantidad = cantidad
        self.valor = None if valor is None else float(valor)
        self.intervalo = intervalo
        self.fuente = fuente
        self.motivo = motivo

    @classmethod
    def indeterminada(cls, cantidad, fuente, motivo):
        """Prediccion: The INDETERMINATE prediction with an explanatory reason."""
        return cls(cantidad, fuente=fuente, motivo=motivo)

    @property
    def es_indeterminada(self):
        """bool: True when neither a value nor a bracket is available."""
        return self.valor is None and self.intervalo is None

    @property
    def es_puntual(self):
        """bool: True for point predictions."""
        return self.valor is not None

    def to_dict(self):
        """
        JSON form: {quantity, value | bracket, source}.

        Returns:
            dict: Serializable prediction
        """
        datos = {"quantity": self.cantidad}
        if self.valor is not None:
            datos["value"] = self.valor
        elif self.intervalo is not None:
            datos["bracket"] = list(self.intervalo)
        else:
            datos["value"] = "INDETERMINATE"
            datos["reason"] = self.motivo
        datos["source"] = self.fuente
        return datos

    def __str__(self):
        if self.valor is not None:
            return f"{self.cantidad} = {self.valor:.10g} [{self.fuente}]"
        if self.intervalo is not None:
            return f"{self.cantidad} in [{self.intervalo[0]:.10g}, {self.intervalo[1]:.10g}] [{self.fuente}]"
        return f"{self.cantidad} INDETERMINATE ({self.motivo})"


class RegistroEnsayo:
    """
    One trial of a sweep cell.

    Attributes:
        peso (str): Weight name
        n (int): Vertex count
        p (float): Edge probability
        celda (int): Cell index in the sweep
        ensayo (int): Trial index within the cell
        semilla (int): Seed of the accepted sample
        diametro (int or float): Diameter of the accepted sample
        reintentos (int): Disconnected samples discarded before it
        empiricos (dict): Quantity -> measured value
        predicciones (dict): Quantity -> Prediccion
        fraccion_bulto (float or None): Bulk fraction of L_f
        fallido (bool): True when no usable sample was obtained
        motivo (str or None): Reason of the failure
    """

    def __init__(self, peso, n, p, celda, ensayo, semilla, diametro=None, reintentos=0,
                 empiricos=None, predicciones=None, fraccion_bulto=None,
                 fallido=False, motivo=None):
        self.peso = peso
        self.n = int(n)
        self.p = float(p)
        self.celda = int(celda)
        self.ensayo = int(ensayo)
        self.semilla = int(semilla)
        self.diametro = diametro
        self.reintentos = int(reintentos)
        self.empiricos = dict(empiricos or {})
        self.predicciones = dict(predicciones or {})
        self.fraccion_bulto = fraccion_bulto
        self.fallido = bool(fallido)
        self.motivo = motivo

    @property
    def clave(self):
        """tuple: (cell, trial), the output sort key."""
        return (self.celda, self.ensayo)

    def razon(self, cantidad):
        """
        Empirical / predicted for point predictions.

        Args:
            cantidad (str): Quantity identifier

        Returns:
            float or None: Ratio, None when not defined
        """
        prediccion = self.predicciones.get(cantidad)
        empirico = self.empiricos.get(cantidad)
        if prediccion is None or empirico is None or not prediccion.es_puntual:
            return None
        if prediccion.valor == 0:
            return None
        return empirico / prediccion.valor

    def razones(self):
        """dict: Quantity -> ratio, only where a ratio is defined."""
        resultado = {}
        for cantidad in self.predicciones:
            valor = self.razon(cantidad)
            if valor is not None:
                resultado[cantidad] = valor
        return resultado

    def a_filas(self, cantidades):
        """
        Rows in the sweep CSV schema, one per quantity.

        Args:
            cantidades (iterable): Quantities in output order

        Returns:
            list: Dictionaries keyed by config.COLUMNAS_CSV
        """
        filas = []
        for cantidad in cantidades:
            prediccion = self.predicciones.get(cantidad)
            inferior = superior = predicho = None
            if prediccion is not None:
                predicho = prediccion.valor
                if prediccion.intervalo is not None:
                    inferior, superior = prediccion.intervalo

            filas.append({
                "weight": self.peso,
                "quantity": cantidad,
                "n": self.n,
                "p": self.p,
                "trial": self.ensayo,
                "seed": self.semilla,
                "empirical": self.empiricos.get(cantidad),
                "predicted": predicho,
                "pred_lower": inferior,
                "pred_upper": superior,
                "ratio": self.razon(cantidad),
                "diameter": "inf" if self.fallido or self.diametro is None else self.diametro,
                "retries": self.reintentos,
                "bulk_fraction": self.fraccion_bulto,
            })
        return filas

    def to_dict(self):
        """dict: JSON form mirroring the record fields."""
        return {
            "weight": self.peso,
            "n": self.n,
            "p": self.p,
            "cell": self.celda,
            "trial": self.ensayo,
            "seed": self.semilla,
            "diameter": _numero_json(self.diametro),
            "retries": self.reintentos,
            "failed": self.fallido,
            "reason": self.motivo,
            "empirical": dict(self.empiricos),
            "predicted": {c: p.to_dict() for c, p in self.predicciones.items()},
            "ratio": self.razones(),
            "bulk_fraction": self.fraccion_bulto,
        }

    def __repr__(self):
        estado = "failed" if self.fallido else f"diam={self.diametro}"
        return f"RegistroEnsayo({self.peso}, n={self.n}, p={self.p}, trial={self.ensayo}, {estado})"


class EntradaVeredicto:
    """
    Aggregate of one (weight, n, quantity) cell.

    Attributes:
        peso (str): Weight name
        n (int): Vertex count
        cantidad (str): Quantity identifier
        ensayos (int): Successful trials
        fallidos (int): Failed trials
        razon_media (float or None): Mean ratio (point predictions)
        desviacion (float or None): Standard deviation of the ratio
        empirico_medio (float or None): Mean empirical value
        intervalo (tuple or None): Bracket of the prediction
        aprobado (bool or None): Pass/fail; None when INDETERMINATE
    """

    def __init__(self, peso, n, cantidad, ensayos, fallidos, razon_media=None,
                 desviacion=None, empirico_medio=None, intervalo=None, aprobado=None):
        self.peso = peso
        self.n = n
        self.cantidad = cantidad
        self.ensayos = ensayos
        self.fallidos = fallidos
        self.razon_media = razon_media
        self.desviacion = desviacion
        self.empirico_medio = empirico_medio
        self.intervalo = intervalo
        self.aprobado = aprobado

    def to_dict(self):
        """dict: JSON form."""
        return {
            "weight": self.peso,
            "n": self.n,
            "quantity": self.cantidad,
            "trials": self.ensayos,
            "failed": self.fallidos,
            "mean_ratio": self.razon_media,
            "std_ratio": self.desviacion,
            "mean_empirical": self.empirico_medio,
            "bracket": list(self.intervalo) if self.intervalo else None,
            "pass": self.aprobado,
        }

    def __str__(self):
        estado = {True: "PASS", False: "FAIL", None: "N/A"}[self.aprobado]
        if self.razon_media is not None:
            detalle = f"mean ratio {self.razon_media:.4f} (sd {self.desviacion:.4f})"
        elif self.empirico_medio is not None and self.intervalo is not None:
            detalle = (f"mean {self.empirico_medio:.6g} in "
                       f"[{self.intervalo[0]:.6g}, {self.intervalo[1]:.6g}]")
        else:
            detalle = "no prediction"
        return f"{estado} {self.peso} n={self.n} {self.cantidad}: {detalle}"


class VeredictoLote:
    """
    Batch verdict of a sweep.

    Attributes:
        entradas (list): EntradaVeredicto per (weight, n, quantity)
        tasas_bulto (dict): (weight, n) -> fraction of trials whose bulk
            fraction reached the threshold
    """

    def __init__(self, entradas=None, tasas_bulto=None):
        self.entradas = list(entradas or [])
        self.tasas_bulto = dict(tasas_bulto or {})

    @property
    def aprobado(self):
        """bool: True when no entry failed (INDETERMINATE entries are ignored)."""
        return all(entrada.aprobado is not False for entrada in self.entradas)

    def fallos(self):
        """list: Entries that failed."""
        return [entrada for entrada in self.entradas if entrada.aprobado is False]

    def to_dict(self):
        """dict: JSON form."""
        return {
            "pass": self.aprobado,
            "entries": [entrada.to_dict() for entrada in self.entradas],
            "bulk_pass_rate": [
                {"weight": peso, "n": n, "rate": tasa}
                for (peso, n), tasa in sorted(self.tasas_bulto.items())
            ],
        }

    def __str__(self):
        lineas = [str(entrada) for entrada in self.entradas]
        for (peso, n), tasa in sorted(self.tasas_bulto.items()):
            lineas.append(f"bulk {peso} n={n}: pass rate {tasa:.3f}")
        return "\n".join(lineas)
