"""Console script ``qha``: same arguments as ``manage.py qha``."""

import os
import sys


def main(argv=None):
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "kernel.settings")
    from django.core.management import execute_from_command_line

    argv = sys.argv[1:] if argv is None else list(argv)
    execute_from_command_line(["qha", "qha", *argv])


if __name__ == "__main__":
    main()
