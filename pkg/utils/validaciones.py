"""
Validation Utilities - Graph Energy Toolkit

This module provides validation functions shared by the graph generator,
the predictors, the sweep configuration loader and the command line.
Every function returns a result dictionary so callers can collect
several problems before deciding what to raise.

Functions:
    - validar_probabilidad: Validate an edge probability
    - validar_entero_positivo: Validate an integer with a lower bound
    - validar_semilla: Validate a 64-bit seed
    - validar_rango: Validate value within range
    - validar_booleano: Validate a true/false flag
    - validar_lista_no_vacia: Validate a non-empty list
"""

import math
import numbers


def validar_probabilidad(valor, abierta=False, nombre_campo="p"):
    """
    Validate an edge probability.

    Args:
        valor: Value to validate
        abierta (bool, optional): Require the open interval (0, 1) instead
            of [0, 1]. Defaults to False.
        nombre_campo (str, optional): Field name for messages. Defaults to "p".

    Returns:
        dict: Validation result with 'valido' (bool) and 'mensaje' (str)

    Example:
        >>> validar_probabilidad(0.5)['valido']
        True
        >>> validar_probabilidad(1.0, abierta=True)['valido']
        False
    """
    if isinstance(valor, bool) or not isinstance(valor, numbers.Real):
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} must be a number"
        }

    numero = float(valor)
    if math.isnan(numero):
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} cannot be NaN"
        }

    if abierta and not (0.0 < numero < 1.0):
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} must lie in the open interval (0, 1), got {numero}"
        }

    if not (0.0 <= numero <= 1.0):
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} must lie in [0, 1], got {numero}"
        }

    return {
        'valido': True,
        'mensaje': f"Valid {nombre_campo}"
    }


def validar_entero_positivo(valor, nombre_campo="Value", minimo=1):
    """
    Validate that a value is an integer not smaller than `minimo`.

    Args:
        valor: Value to validate
        nombre_campo (str, optional): Field name. Defaults to "Value".
        minimo (int, optional): Smallest accepted value. Defaults to 1.

    Returns:
        dict: Validation result with 'valido' (bool) and 'mensaje' (str)

    Example:
        >>> validar_entero_positivo(400, "n", minimo=2)['valido']
        True
    """
    if isinstance(valor, bool) or not isinstance(valor, numbers.Integral):
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} must be an integer"
        }

    if valor < minimo:
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} must be at least {minimo}, got {valor}"
        }

    return {
        'valido': True,
        'mensaje': f"Valid {nombre_campo}"
    }


def validar_semilla(valor, nombre_campo="seed"):
    """
    Validate a seed: any integer in [0, 2**64).

    Args:
        valor: Value to validate
        nombre_campo (str, optional): Field name. Defaults to "seed".

    Returns:
        dict: Validation result with 'valido' (bool) and 'mensaje' (str)
    """
    resultado = validar_entero_positivo(valor, nombre_campo, minimo=0)
    if not resultado['valido']:
        return resultado

    if valor >= 2 ** 64:
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} must fit in 64 bits"
        }

    return resultado


def validar_rango(valor, minimo, maximo, nombre_campo="Value"):
    """
    Validate that a value is within a specified closed range.

    Args:
        valor: Value to validate
        minimo: Minimum allowed value
        maximo: Maximum allowed value
        nombre_campo (str, optional): Field name. Defaults to "Value".

    Returns:
        dict: Validation result with 'valido' (bool) and 'mensaje' (str)

    Example:
        >>> validar_rango(0.1, 0, 1, "tolerance")['valido']
        True
    """
    if isinstance(valor, bool) or not isinstance(valor, numbers.Real):
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} must be a number"
        }

    if not (minimo <= valor <= maximo):
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} must be between {minimo} and {maximo}"
        }

    return {
        'valido': True,
        'mensaje': f"Valid {nombre_campo} in range"
    }


def validar_booleano(valor, nombre_campo="Flag"):
    """
    Validate a boolean flag.

    Args:
        valor: Value to validate
        nombre_campo (str, optional): Field name. Defaults to "Flag".

    Returns:
        dict: Validation result with 'valido' (bool) and 'mensaje' (str)
    """
    if not isinstance(valor, bool):
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} must be true or false"
        }

    return {
        'valido': True,
        'mensaje': f"Valid {nombre_campo}"
    }


def validar_lista_no_vacia(valor, nombre_campo="List"):
    """
    Validate that a value is a non-empty list.

    Args:
        valor: Value to validate
        nombre_campo (str, optional): Field name. Defaults to "List".

    Returns:
        dict: Validation result with 'valido' (bool) and 'mensaje' (str)
    """
    if not isinstance(valor, (list, tuple)):
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} must be a list"
        }

    if len(valor) == 0:
        return {
            'valido': False,
            'mensaje': f"{nombre_campo} cannot be empty"
        }

    return {
        'valido': True,
        'mensaje': f"Valid {nombre_campo}"
    }
