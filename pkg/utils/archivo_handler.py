"""
File Handler Utility - Graph Energy Toolkit

This module provides the ArchivoHandler class which centralizes all file
operations of the toolkit: edge lists, sweep CSV files, JSON reports and
matrix dumps. Every writer accepts None as destination, meaning stdout,
because the command line writes data to stdout and logs to stderr.

Output is byte-deterministic: floats are rendered with repr, JSON keys keep
insertion order and line endings are always LF.

Classes:
    ArchivoHandler: Main class for file I/O operations
"""

import csv
import io
import json
import logging
import os
import sys

from utils.excepciones import ParametroInvalidoError

logger = logging.getLogger("GraphEnergy.archivos")


class ArchivoHandler:
    """
    Handler class for all file operations.

    Methods:
        - leer_texto: Read a whole text file
        - escribir_texto: Write text to a file or stdout
        - guardar_json: Save data to a JSON file or stdout
        - json_a_texto: Render data as deterministic JSON text
        - csv_a_texto: Render rows as CSV text with an optional '#' line
        - guardar_csv: Save rows to a CSV file or stdout
        - verificar_archivo_existe: Check if file exists
        - crear_directorio: Create directory if it doesn't exist
    """

    def __init__(self, encoding='utf-8'):
        """
        Initialize the file handler.

        Args:
            encoding (str, optional): File encoding. Defaults to 'utf-8'.
        """
        self.encoding = encoding

    def leer_texto(self, ruta_archivo):
        """
        Read a whole text file.

        Args:
            ruta_archivo (str or Path): Path to the file

        Returns:
            str: File contents

        Raises:
            ParametroInvalidoError: If the file does not exist or cannot be read
        """
        if not self.verificar_archivo_existe(ruta_archivo):
            raise ParametroInvalidoError(f"File not found: {ruta_archivo}")

        try:
            with open(ruta_archivo, 'r', encoding=self.encoding, newline='') as file:
                return file.read()
        except OSError as e:
            raise ParametroInvalidoError(f"Cannot read {ruta_archivo}: {e}") from e

    def escribir_texto(self, ruta_archivo, contenido):
        """
        Write text to a file, or to stdout when no path is given.

        Args:
            ruta_archivo (str or Path or None): Destination path
            contenido (str): Text to write

        Returns:
            bool: True once written
        """
        if ruta_archivo is None:
            sys.stdout.write(contenido)
            sys.stdout.flush()
            return True

        directorio = os.path.dirname(str(ruta_archivo))
        if directorio:
            self.crear_directorio(directorio)

        with open(ruta_archivo, 'w', encoding=self.encoding, newline='\n') as file:
            file.write(contenido)

        logger.debug("Wrote %d characters to %s", len(contenido), ruta_archivo)
        return True

    def json_a_texto(self, datos):
        """
        Render data as JSON text with a trailing newline.

        Args:
            datos: JSON-serializable data

        Returns:
            str: Deterministic JSON text
        """
        return json.dumps(datos, indent=2, ensure_ascii=False) + "\n"

    def guardar_json(self, ruta_archivo, datos):
        """
        Save data to a JSON file, or to stdout when no path is given.

        Args:
            ruta_archivo (str or Path or None): Destination path
            datos: JSON-serializable data

        Returns:
            bool: True once written
        """
        return self.escribir_texto(ruta_archivo, self.json_a_texto(datos))

    def csv_a_texto(self, filas, encabezados, comentario=None):
        """
        Render rows as CSV text.

        Args:
            filas (list): List of dictionaries keyed by the headers
            encabezados (list): Column order
            comentario (str, optional): Metadata placed on a first line
                prefixed with '#'. Defaults to None.

        Returns:
            str: CSV text with LF line endings
        """
        buffer = io.StringIO()
        if comentario:
            buffer.write(f"# {comentario}\n")

        writer = csv.DictWriter(buffer, fieldnames=list(encabezados), lineterminator='\n')
        writer.writeheader()
        for fila in filas:
            writer.writerow({clave: _celda(fila.get(clave)) for clave in encabezados})

        return buffer.getvalue()

    def guardar_csv(self, ruta_archivo, filas, encabezados, comentario=None):
        """
        Save rows to a CSV file, or to stdout when no path is given.

        Args:
            ruta_archivo (str or Path or None): Destination path
            filas (list): List of dictionaries
            encabezados (list): Column order
            comentario (str, optional): '#' metadata line. Defaults to None.

        Returns:
            bool: True once written
        """
        texto = self.csv_a_texto(filas, encabezados, comentario)
        return self.escribir_texto(ruta_archivo, texto)

    def verificar_archivo_existe(self, ruta_archivo):
        """
        Check if a file exists.

        Args:
            ruta_archivo (str or Path): Path to file

        Returns:
            bool: True if file exists, False otherwise
        """
        return os.path.isfile(ruta_archivo)

    def crear_directorio(self, ruta_directorio):
        """
        Create a directory if it doesn't exist.

        Args:
            ruta_directorio (str or Path): Path to directory

        Returns:
            bool: True if created or already exists
        """
        os.makedirs(ruta_directorio, exist_ok=True)
        return True


def _celda(valor):
    """Render one CSV cell: empty for None, repr for floats."""
    if valor is None:
        return ""
    if isinstance(valor, bool):
        return "true" if valor else "false"
    if isinstance(valor, float):
        return repr(float(valor))
    return valor
