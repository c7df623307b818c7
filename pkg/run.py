import sys
from pathlib import Path

# Add the project root directory to Python path
project_root = Path(__file__).parent
sys.path.append(str(project_root))

from src.cli.main import main as cli_main
from src.utils.logger import install_excepthook


def main():
    install_excepthook()
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
