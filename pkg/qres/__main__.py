"""Allow ``python -m qres``."""
from qres.cli.main import main

if __name__ == "__main__":
    main()
