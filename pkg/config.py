"""
config.py
---------
Global configuration file for the Graph Energy Toolkit.

This module centralizes:
- Directory paths
- Numerical tolerances
- Experiment defaults
- Exit codes
- Logging configuration
- Application metadata
"""

import logging
import sys
from pathlib import Path


# ============================================================
# 📌 BASE PATHS
# ============================================================

# Root directory of the project
BASE_DIR = Path(__file__).resolve().parent

# Data directories
DATA_DIR = BASE_DIR / "data"
GRAFOS_DIR = DATA_DIR / "grafos"
BARRIDOS_DIR = DATA_DIR / "barridos"

# Default directory of --log-file names given without a directory
LOGS_DIR = BASE_DIR / "logs"


# ============================================================
# 📌 NUMERICAL TOLERANCES
# ============================================================

# Asymmetry accepted before a matrix is rejected (relative to ||M||_F)
TOL_SIMETRIA = 1e-12

# Accuracy contract of the eigensolver (relative to ||M||_F)
TOL_VALORES_PROPIOS = 1e-10

# Negative eigenvalues above -TOL * ||M|| are rounding noise, clamped to 0
TOL_RECORTE_NEGATIVO = 1e-9


# ============================================================
# 📌 EXPERIMENT DEFAULTS
# ============================================================

# Relative tolerance for point predictions (n = 400)
TOLERANCIA_PUNTUAL = 0.10

# Slack applied to both ends of a predicted bracket
HOLGURA_INTERVALO = 0.05

# Relative half-width around the predicted bulk location
TOLERANCIA_BULTO = 0.20

# Minimum bulk fraction for a trial to count as a bulk pass
UMBRAL_BULTO = 0.95

# Cap on resampling attempts for disconnected samples
MAX_REINTENTOS = 100

# Outlier eigenvalues the case analysis may assign to O(n F)
MAX_EXTREMOS = 3

# General Randic exponent when none is given
ALFA_RANDIC = 0.5

# Reference size the acceptance bands are calibrated for
N_REFERENCIA = 400

# Reduced size used by `verify --fast`
N_RAPIDO = 200

# Master seed of the acceptance battery
SEMILLA_VERIFICACION = 20250101

# Quantities understood by predictors and sweeps
CANTIDADES = ("E_adj", "E_Wf", "LE_f", "LE_plus_f", "LEL_f", "IE_f")

# CSV schema of sweep records (exact column order)
COLUMNAS_CSV = (
    "weight", "quantity", "n", "p", "trial", "seed", "empirical",
    "predicted", "pred_lower", "pred_upper", "ratio", "diameter",
    "retries", "bulk_fraction",
)


# ============================================================
# 📌 EXIT CODES
# ============================================================

SALIDA_OK = 0
SALIDA_USO = 2
SALIDA_DOMINIO = 3
SALIDA_VERIFICACION = 4


# ============================================================
# 📌 LOGGING CONFIG
# ============================================================

LOG_NAME = "GraphEnergy"
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

logger = logging.getLogger(LOG_NAME)


def configurar_logging(verbose=False, archivo_log=None):
    """
    Configure the application logger.

    Logs always go to stderr because stdout carries data. When a log file
    is requested it is written in addition to stderr; a bare file name
    goes to LOGS_DIR.

    Args:
        verbose (bool, optional): Use DEBUG instead of INFO. Defaults to False.
        archivo_log (str or Path, optional): Extra log file. Defaults to None.

    Returns:
        logging.Logger: The configured application logger
    """
    nivel = logging.DEBUG if verbose else logging.INFO
    formato = logging.Formatter(LOG_FORMAT)

    for anterior in logger.handlers:
        anterior.close()
    logger.handlers.clear()
    logger.setLevel(nivel)
    logger.propagate = False

    consola = logging.StreamHandler(sys.stderr)
    consola.setFormatter(formato)
    logger.addHandler(consola)

    if archivo_log is not None:
        ruta = Path(archivo_log)
        if ruta.parent == Path("."):
            ruta = LOGS_DIR / ruta
        ruta.parent.mkdir(parents=True, exist_ok=True)
        archivo = logging.FileHandler(ruta, encoding="utf-8")
        archivo.setFormatter(formato)
        logger.addHandler(archivo)

    return logger


# ============================================================
# 📌 APP INFO
# ============================================================

APP_NAME = "graph-energy"
APP_TITLE = "Graph Energy Toolkit"
APP_VERSION = "1.0"
