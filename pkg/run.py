#!/usr/bin/env python3
from src.main import cli

if __name__ == '__main__':
    cli(prog_name='mck-verify')
