"""
Weight Function Model - Graph Energy Toolkit

A weight function f(D, d_i, d_j) assigns a real weight to an ordered pair
of distinct vertices from their distance D and their degrees. Each
registry entry bundles the evaluator with the analytic metadata the
predictors need: f(1, np, np), f(2, np, np), the limit class of their
ratio, and the closed leading term printed in the index tables.

Classes:
    ContextoPeso: Graph-level data some weights need (n, diameter)
    ClaseLimite: Limit of f(1,np,np)/f(2,np,np) - finite C or infinite
    FuncionPeso: Named weight function with evaluator and metadata

Constants:
    GRADOS, DISTANCIA, GRADO_DISTANCIA: The three kinds of weight
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from utils.excepciones import DesconexionError, DominioPesoError, ParametroInvalidoError


GRADOS = "degree-based"
DISTANCIA = "distance-based"
GRADO_DISTANCIA = "degree-distance"

TIPOS = (GRADOS, DISTANCIA, GRADO_DISTANCIA)


@dataclass(frozen=True)
class ContextoPeso:
    """
    Graph-level context passed to every evaluation.

    Attributes:
        n (int): Number of vertices (Lanzhou index)
        diametro (float): Actual diameter of the sampled graph (reciprocal
            complementary Wiener and reverse Wiener); INFINITO when
            disconnected
    """
    n: int
    diametro: float = 2


@dataclass(frozen=True)
class ClaseLimite:
    """
    Limit of f(1, np, np) / f(2, np, np) as n grows.

    Attributes:
        finita (bool): True when the ratio tends to a real constant C
        C (float or None): The constant, None for the infinite class
    """
    finita: bool
    C: Optional[float] = None

    @classmethod
    def infinita(cls):
        """ClaseLimite: The +-infinity class (f2 vanishes or is negligible)."""
        return cls(False, None)

    @classmethod
    def constante(cls, C):
        """ClaseLimite: The finite class with limit C."""
        return cls(True, float(C))

    def __str__(self):
        return f"FINITE({self.C:g})" if self.finita else "INFINITE"


def _evaluar_seguro(nombre, calculo, *argumentos):
    """Run a computation turning every real-domain failure into DominioPesoError."""
    try:
        with np.errstate(divide='raise', invalid='raise', over='raise'):
            resultado = calculo(*argumentos)
    except (FloatingPointError, ZeroDivisionError, ValueError, OverflowError) as e:
        raise DominioPesoError(f"{nombre}: evaluation outside the real domain ({e})") from e

    if not np.all(np.isfinite(resultado)):
        raise DominioPesoError(f"{nombre}: evaluation produced a non-finite value")
    return resultado


@dataclass(frozen=True, eq=False)
class FuncionPeso:
    """
    Named weight function f(D, d_i, d_j; ctx) with asymptotic metadata.

    Degree-based weights are only evaluated on adjacent pairs (D = 1) and
    are 0 for D >= 2. Evaluators work elementwise on numpy arrays, so the
    matrix builders evaluate a whole upper triangle in one call.

    Attributes:
        nombre (str): Canonical CLI identifier (lower_snake_case)
        tipo (str): GRADOS, DISTANCIA or GRADO_DISTANCIA
        formula (callable): (D, d_i, d_j, ctx) -> weight, elementwise
        f1 (callable): (n, p) -> f(1, np, np), written analytically
        f2 (callable): (n, p) -> f(2, np, np), written analytically
        clase_limite (ClaseLimite): Limit class of f1/f2
        orden_tabla (callable): (n, p) -> leading term of LEL_f and IE_f
            as printed in the index tables
        tabla_exacta (bool): True when the predictor reproduces the table
            term exactly at every n (power-type indices)
        usa_grados (bool): False when f ignores the degrees
        parametros (dict): Extra real parameters (alpha for General Randic)
        descripcion (str): Human readable formula
    """
    nombre: str
    tipo: str
    formula: Callable
    f1: Callable
    f2: Callable
    clase_limite: ClaseLimite
    orden_tabla: Callable
    tabla_exacta: bool = True
    usa_grados: bool = True
    parametros: dict = field(default_factory=dict)
    descripcion: str = ""

    def __post_init__(self):
        if self.tipo not in TIPOS:
            raise ParametroInvalidoError(f"Unknown weight kind {self.tipo!r}")

    @property
    def depende_de_distancia(self):
        """bool: True when the weight needs finite distances beyond adjacency."""
        return self.tipo != GRADOS

    @property
    def solo_distancia(self):
        """bool: True when f depends on D only (the distance-only predictions apply)."""
        return not self.usa_grados

    @property
    def solo_adyacencia(self):
        """bool: True when f vanishes for D >= 2 (weighted adjacency matrices)."""
        return self.tipo == GRADOS

    def evaluar(self, D, di, dj, ctx):
        """
        Evaluate f elementwise.

        Args:
            D: Distance(s), positive integers; INFINITO for unreachable pairs
            di: Degree(s) of the first vertex
            dj: Degree(s) of the second vertex
            ctx (ContextoPeso): Graph context

        Returns:
            float or numpy.ndarray: Weight(s); a float when all inputs are scalars

        Raises:
            DesconexionError: INFINITO distance with a distance-dependent weight
            ParametroInvalidoError: Distance below 1
            DominioPesoError: Evaluation outside the real domain
        """
        escalar = np.ndim(D) == 0 and np.ndim(di) == 0 and np.ndim(dj) == 0
        D, di, dj = np.broadcast_arrays(
            np.asarray(D, dtype=np.float64),
            np.asarray(di, dtype=np.float64),
            np.asarray(dj, dtype=np.float64),
        )

        if np.any(D < 1):
            raise ParametroInvalidoError(f"{self.nombre}: distances must be >= 1")

        if self.tipo == GRADOS:
            resultado = np.zeros(D.shape)
            adyacentes = D == 1
            if np.any(adyacentes):
                resultado[adyacentes] = _evaluar_seguro(
                    self.nombre, self.formula,
                    D[adyacentes], di[adyacentes], dj[adyacentes], ctx,
                )
        else:
            if not np.all(np.isfinite(D)) or not math.isfinite(ctx.diametro):
                raise DesconexionError(
                    f"{self.nombre} needs finite distances but the graph is disconnected"
                )
            resultado = np.asarray(
                _evaluar_seguro(self.nombre, self.formula, D, di, dj, ctx),
                dtype=np.float64,
            ) * np.ones(D.shape)

        return float(resultado) if escalar else resultado

    def par_asintotico(self, n, p):
        """
        Analytic (f(1, np, np), f(2, np, np)).

        Args:
            n (int): Number of vertices
            p (float): Edge probability

        Returns:
            tuple: (f1, f2) as floats

        Raises:
            DominioPesoError: If the formulas leave the real domain at np
        """
        f1 = float(_evaluar_seguro(self.nombre, self.f1, n, p))
        f2 = float(_evaluar_seguro(self.nombre, self.f2, n, p))
        return f1, f2

    def escalada(self, c):
        """
        The weight c * f.

        Energies scale by c and square-root energies by sqrt(c); the limit
        class is unchanged.

        Args:
            c (float): Positive factor

        Returns:
            FuncionPeso: Scaled weight named "<nombre>*<c>"
        """
        if not c > 0:
            raise ParametroInvalidoError(f"Scale factor must be positive, got {c}")

        formula, f1, f2, orden = self.formula, self.f1, self.f2, self.orden_tabla
        return FuncionPeso(
            nombre=f"{self.nombre}*{c:g}",
            tipo=self.tipo,
            formula=lambda D, di, dj, ctx: c * formula(D, di, dj, ctx),
            f1=lambda n, p: c * f1(n, p),
            f2=lambda n, p: c * f2(n, p),
            clase_limite=self.clase_limite,
            orden_tabla=lambda n, p: math.sqrt(c) * orden(n, p),
            tabla_exacta=self.tabla_exacta,
            usa_grados=self.usa_grados,
            parametros=dict(self.parametros, escala=c),
            descripcion=f"{c:g} * ({self.descripcion})",
        )

    def to_dict(self):
        """
        Describe the entry for JSON output.

        Returns:
            dict: Name, kind, formula text, parameters and limit class
        """
        return {
            "name": self.nombre,
            "kind": self.tipo,
            "formula": self.descripcion,
            "params": dict(self.parametros),
            "limit_class": str(self.clase_limite),
        }

    def __str__(self):
        return f"{self.nombre} [{self.tipo}] f = {self.descripcion}"
