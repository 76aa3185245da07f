#!/usr/bin/env python
"""Django's command-line utility; runs the toolkit's commands."""

from project.cli import main

if __name__ == '__main__':
    main()
