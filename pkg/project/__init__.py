"""
Initialize the project package.

Hosts the settings and the command-line entry point of the toolkit.
"""
