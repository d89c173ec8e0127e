"""
Exception Hierarchy - Graph Energy Toolkit

Every error raised by the toolkit derives from ValueError, so code that
only knows about ValueError keeps working. The command line maps these
classes to exit codes (see config.SALIDA_*).

Classes:
    GrafoError: Base class for graph construction and parsing errors
    FormatoAristasError: Malformed edge-list text
    EncabezadoInvalidoError, VerticeFueraDeRangoError, LazoError,
    AristaDuplicadaError: The distinct edge-list failures
    ProbabilidadInvalidaError: Edge probability outside its allowed range
    ParametroInvalidoError: Any other invalid argument
    DominioPesoError: Weight evaluated outside the real domain
    DesconexionError: Infinite distance met by a distance-dependent weight
    PesoNoAplicableError: Predictor used with a weight it does not cover
    MatrizNoSimetricaError: Eigensolver input is not symmetric
    EspectroVacioError: Statistic requested on an empty spectrum
    ConfiguracionError: Sweep configuration file problem (with line number)
"""


class GrafoError(ValueError):
    """Base class for graph errors."""


class FormatoAristasError(GrafoError):
    """Edge-list text could not be parsed."""


class EncabezadoInvalidoError(FormatoAristasError):
    """Missing or malformed "n m" header, or edge count mismatch."""


class VerticeFueraDeRangoError(FormatoAristasError):
    """An edge names a vertex outside 0..n-1."""


class LazoError(FormatoAristasError):
    """An edge joins a vertex to itself."""


class AristaDuplicadaError(FormatoAristasError):
    """The same unordered pair appears twice."""


class ProbabilidadInvalidaError(ValueError):
    """Edge probability outside the accepted interval."""


class ParametroInvalidoError(ValueError):
    """Invalid argument that has no more specific class."""


class DominioPesoError(ValueError):
    """A weight function left the real domain (log of 0, sqrt of < 0, ...)."""


class DesconexionError(ValueError):
    """
    A distance-dependent weight met an unreachable pair.

    Attributes:
        politica (str): Hint naming the policy that lets the caller resample
    """

    def __init__(self, mensaje, politica="--resample"):
        super().__init__(f"{mensaje} (use {politica} to resample until connected)")
        self.politica = politica


class PesoNoAplicableError(ValueError):
    """The chosen predictor does not cover this kind of weight."""


class MatrizNoSimetricaError(ValueError):
    """Matrix asymmetry beyond the accepted tolerance."""


class EspectroVacioError(ValueError):
    """Statistic requested on a spectrum with no values."""


class ConfiguracionError(ValueError):
    """
    Problem in a sweep configuration file.

    Attributes:
        linea (int or None): 1-based line of the offending entry
        clave (str or None): Configuration key the problem belongs to
        mensaje (str): Message without the line prefix
    """

    def __init__(self, mensaje, linea=None, clave=None):
        texto = f"line {linea}: {mensaje}" if linea is not None else mensaje
        super().__init__(texto)
        self.mensaje = mensaje
        self.linea = linea
        self.clave = clave
