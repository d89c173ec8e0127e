"""
Entry point of the Graph Energy Toolkit.

    python main.py predict --weight harary --n 1000 --p 0.5 --quantity LEL_f
    python main.py verify --fast
"""

import os
import sys

# Add project root to path for imports
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from ui.linea_comandos import main


if __name__ == "__main__":
    sys.exit(main())
