"""Project source package root."""
