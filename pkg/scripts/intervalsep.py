"""Run the intervalsep CLI from a source checkout.

Usage:
    python scripts/intervalsep.py solve --input instance.txt --mode two
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
