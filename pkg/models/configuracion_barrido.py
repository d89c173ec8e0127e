"""
Sweep Configuration - Graph Energy Toolkit

A sweep is described by a flat TOML file whose keys mirror the fields of
ConfiguracionBarrido:

    weights = ["unweighted", "harary"]
    n_values = [100, 200, 400]
    p = 0.5
    trials = 5
    master_seed = 1
    resample_disconnected = true
    quantities = ["LEL_f", "IE_f"]
    tolerance = 0.10

Optional keys: bracket_slack, bulk_tolerance, alpha.

Every semantic problem is reported with the line number of the offending
key so the command line can point the user at it.

Classes:
    ConfiguracionBarrido: Validated sweep parameters

Functions:
    cargar_configuracion: Parse TOML text into a ConfiguracionBarrido
"""

import re
import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from config import (
    ALFA_RANDIC,
    CANTIDADES,
    HOLGURA_INTERVALO,
    TOLERANCIA_BULTO,
    TOLERANCIA_PUNTUAL,
)
from pesos.registro_pesos import nombres_pesos
from utils.excepciones import ConfiguracionError
from utils.validaciones import (
    validar_booleano,
    validar_entero_positivo,
    validar_lista_no_vacia,
    validar_probabilidad,
    validar_rango,
    validar_semilla,
)


CLAVES_OBLIGATORIAS = ("weights", "n_values", "p", "trials", "master_seed")

CLAVES_OPCIONALES = {
    "resample_disconnected": False,
    "quantities": list(CANTIDADES),
    "tolerance": TOLERANCIA_PUNTUAL,
    "bracket_slack": HOLGURA_INTERVALO,
    "bulk_tolerance": TOLERANCIA_BULTO,
    "alpha": ALFA_RANDIC,
}


class ConfiguracionBarrido:
    """
    Validated parameters of a Monte Carlo sweep.

    Attributes:
        pesos (tuple): Weight identifiers
        valores_n (tuple): Vertex counts, each >= 2
        p (float): Edge probability in (0, 1)
        ensayos (int): Trials per cell (>= 1)
        semilla_maestra (int): 64-bit master seed
        remuestrear_desconectados (bool): Resample disconnected graphs
        cantidades (tuple): Quantities to measure
        tolerancia (float): Relative tolerance for point predictions
        holgura_intervalo (float): Relative slack on bracket endpoints
        tolerancia_bulto (float): Relative half-width of the bulk window
        alpha (float): General Randic exponent
    """

    def __init__(self, pesos, valores_n, p, ensayos, semilla_maestra,
                 remuestrear_desconectados=False, cantidades=CANTIDADES,
                 tolerancia=TOLERANCIA_PUNTUAL, holgura_intervalo=HOLGURA_INTERVALO,
                 tolerancia_bulto=TOLERANCIA_BULTO, alpha=ALFA_RANDIC):
        """
        Initialize and validate a sweep configuration.

        Raises:
            ConfiguracionError: On any invalid value (without line numbers;
                cargar_configuracion adds them)
        """
        _exigir(validar_lista_no_vacia(list(pesos), "weights"), "weights")
        validos = nombres_pesos()
        for nombre in pesos:
            if nombre not in validos:
                raise ConfiguracionError(f"weights: unknown weight {nombre!r}", clave="weights")

        _exigir(validar_lista_no_vacia(list(valores_n), "n_values"), "n_values")
        for n in valores_n:
            _exigir(validar_entero_positivo(n, "n_values", minimo=2), "n_values")

        _exigir(validar_probabilidad(p, abierta=True), "p")
        _exigir(validar_entero_positivo(ensayos, "trials", minimo=1), "trials")
        _exigir(validar_semilla(semilla_maestra, "master_seed"), "master_seed")
        _exigir(validar_booleano(remuestrear_desconectados, "resample_disconnected"),
                "resample_disconnected")

        _exigir(validar_lista_no_vacia(list(cantidades), "quantities"), "quantities")
        for cantidad in cantidades:
            if cantidad not in CANTIDADES:
                raise ConfiguracionError(
                    f"quantities: unknown quantity {cantidad!r}; valid: {', '.join(CANTIDADES)}",
                    clave="quantities",
                )

        for clave, valor in (("tolerance", tolerancia), ("bracket_slack", holgura_intervalo),
                             ("bulk_tolerance", tolerancia_bulto)):
            _exigir(validar_rango(valor, 0, 1, clave), clave)
            if valor <= 0:
                raise ConfiguracionError(f"{clave} must be positive", clave=clave)

        _exigir(validar_rango(alpha, -1e6, 1e6, "alpha"), "alpha")

        self.pesos = tuple(pesos)
        self.valores_n = tuple(int(n) for n in valores_n)
        self.p = float(p)
        self.ensayos = int(ensayos)
        self.semilla_maestra = int(semilla_maestra)
        self.remuestrear_desconectados = remuestrear_desconectados
        self.cantidades = tuple(c for c in CANTIDADES if c in cantidades)
        self.tolerancia = float(tolerancia)
        self.holgura_intervalo = float(holgura_intervalo)
        self.tolerancia_bulto = float(tolerancia_bulto)
        self.alpha = float(alpha)

    def celdas(self):
        """
        Sweep cells in output order.

        Returns:
            list: (cell index, weight name, n) for weights x n_values
        """
        return [
            (indice, peso, n)
            for indice, (peso, n) in enumerate(
                (peso, n) for peso in self.pesos for n in self.valores_n
            )
        ]

    def to_dict(self):
        """dict: Configuration under its file keys."""
        return {
            "weights": list(self.pesos),
            "n_values": list(self.valores_n),
            "p": self.p,
            "trials": self.ensayos,
            "master_seed": self.semilla_maestra,
            "resample_disconnected": self.remuestrear_desconectados,
            "quantities": list(self.cantidades),
            "tolerance": self.tolerancia,
            "bracket_slack": self.holgura_intervalo,
            "bulk_tolerance": self.tolerancia_bulto,
            "alpha": self.alpha,
        }

    def __repr__(self):
        return (f"ConfiguracionBarrido(weights={list(self.pesos)}, n={list(self.valores_n)}, "
                f"p={self.p}, trials={self.ensayos})")


def _exigir(resultado, clave):
    if not resultado['valido']:
        raise ConfiguracionError(resultado['mensaje'], clave=clave)


def _linea_de_clave(texto, clave):
    """1-based line where `clave = ...` (or a `[clave]` table) appears, or None."""
    nombre = re.escape(clave)
    patron = re.compile(rf"^\s*(?:{nombre}\s*=|\[\s*{nombre}\s*\])")
    for numero, linea in enumerate(texto.splitlines(), start=1):
        if patron.match(linea):
            return numero
    return None


def cargar_configuracion(texto):
    """
    Parse and validate a sweep configuration.

    Args:
        texto (str): TOML text

    Returns:
        ConfiguracionBarrido: Validated configuration

    Raises:
        ConfiguracionError: Syntax errors, unknown or missing keys, invalid
            values; the message starts with "line N:" whenever the line is known

    Example:
        >>> cfg = cargar_configuracion('weights = ["harary"]\\nn_values = [50]\\n'
        ...                            'p = 0.5\\ntrials = 2\\nmaster_seed = 1\\n')
        >>> cfg.ensayos
        2
    """
    try:
        datos = tomllib.loads(texto)
    except tomllib.TOMLDecodeError as e:
        coincidencia = re.search(r"line (\d+)", str(e))
        linea = int(coincidencia.group(1)) if coincidencia else None
        raise ConfiguracionError(f"invalid TOML ({e})", linea=linea) from e

    for clave, valor in datos.items():
        if clave not in CLAVES_OBLIGATORIAS and clave not in CLAVES_OPCIONALES:
            raise ConfiguracionError(f"unknown key {clave!r}", linea=_linea_de_clave(texto, clave))
        if isinstance(valor, dict):
            raise ConfiguracionError(f"{clave}: tables are not allowed, the file is flat",
                                     linea=_linea_de_clave(texto, clave))

    for clave in CLAVES_OBLIGATORIAS:
        if clave not in datos:
            raise ConfiguracionError(f"missing required key {clave!r}")

    valores = dict(CLAVES_OPCIONALES)
    valores.update(datos)

    try:
        return ConfiguracionBarrido(
            pesos=_como_lista(valores["weights"]),
            valores_n=_como_lista(valores["n_values"]),
            p=valores["p"],
            ensayos=valores["trials"],
            semilla_maestra=valores["master_seed"],
            remuestrear_desconectados=valores["resample_disconnected"],
            cantidades=_como_lista(valores["quantities"]),
            tolerancia=valores["tolerance"],
            holgura_intervalo=valores["bracket_slack"],
            tolerancia_bulto=valores["bulk_tolerance"],
            alpha=valores["alpha"],
        )
    except ConfiguracionError as e:
        if e.linea is None and e.clave is not None:
            raise ConfiguracionError(e.mensaje, linea=_linea_de_clave(texto, e.clave),
                                     clave=e.clave) from e
        raise


def _como_lista(valor):
    """A scalar stands for a one-element list."""
    return valor if isinstance(valor, list) else [valor]
