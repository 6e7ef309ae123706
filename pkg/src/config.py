import os
from dotenv import load_dotenv

load_dotenv()


def _flag(name, default):
    value = os.environ.get(name)
    if value is None:
        return default
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    VERSION = os.environ.get('MCK_VERSION', '1.0.0')

    # Worker pool and sweep sizes
    JOBS = int(os.environ.get('MCK_JOBS', 1))
    N_MAX = int(os.environ.get('MCK_N_MAX', 8))
    SOCLE_N_MAX = int(os.environ.get('MCK_SOCLE_N_MAX', 12))
    MOTIVE_N_MAX = int(os.environ.get('MCK_MOTIVE_N_MAX', 6))

    # Output
    OUTPUT_FORMAT = os.environ.get('MCK_OUTPUT_FORMAT', 'table')
    OUTPUT_FORMATS = ['table', 'json', 'csv']
    RECORD_TIMINGS = _flag('MCK_RECORD_TIMINGS', True)

    # Tagged trace lines on stderr
    DEBUG = _flag('MCK_DEBUG', False)

    # Symbolic rewriting
    REWRITE_STEP_BOUND = int(os.environ.get('MCK_REWRITE_STEP_BOUND', 10000))

    VARIETIES = [
        'cubic',
        'kuechle-c7',
        'fano-of-lines',
        'census',
    ]
