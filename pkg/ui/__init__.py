"""
User Interface Package - Graph Energy Toolkit

The toolkit is driven from the command line; plotting and interactive
use are left to external tools fed with the CSV output.

Modules:
    - linea_comandos: argparse front end with the subcommands
                     * gen, spectrum, energy, predict
                     * sweep, verify, esd

Design Pattern:
    1. construir_parser builds one subparser per subcommand
    2. AplicacionLineaComandos receives the parsed arguments and an
       archivo_handler, and dispatches to one method per subcommand
    3. Each method delegates to the gestor and algorithm layers
    4. main maps the exception hierarchy to exit codes
"""

from ui.linea_comandos import AplicacionLineaComandos, construir_parser, main

__all__ = [
    'AplicacionLineaComandos',
    'construir_parser',
    'main',
]

__version__ = '1.0.0'
