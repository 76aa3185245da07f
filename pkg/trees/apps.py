"""
Application configuration for the trees app.
"""

from django.apps import AppConfig


class TreesConfig(AppConfig):
    name = 'trees'
    verbose_name = 'trees'
