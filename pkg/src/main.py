import os
import sys
# DON'T CHANGE THIS !!!
sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))

import click
from dotenv import load_dotenv

from src.config import Config
from src.routes.fano import fano_cmd
from src.routes.gamma3 import gamma3_cmd
from src.routes.hodge import hodge_cmd
from src.routes.mck import mck_cmd
from src.routes.schubert import schubert_cmd
from src.routes.verify import verify_all_cmd
from src.services.trace import trace

# Load environment variables
load_dotenv()


def create_cli():
    @click.group('mck-verify')
    @click.version_option(Config.VERSION, prog_name='mck-verify')
    def cli():
        """Exact verification of the multiplicative Chow-Kunneth computations for cubic hypersurfaces."""
        trace('CLI', f"mck-verify {Config.VERSION}, jobs={Config.JOBS}")

    # Register command groups
    cli.add_command(schubert_cmd)
    cli.add_command(fano_cmd)
    cli.add_command(mck_cmd)
    cli.add_command(gamma3_cmd)
    cli.add_command(hodge_cmd)
    cli.add_command(verify_all_cmd)
    return cli


cli = create_cli()

if __name__ == '__main__':
    cli()
