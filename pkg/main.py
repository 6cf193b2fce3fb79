# main.py - quantum Brauer algebra verifier entry point

import sys

from app_cli import main

if __name__ == "__main__":
    sys.exit(main())
