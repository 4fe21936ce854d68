"""
run(argv) → exit code.

Lab subcommands and Django's own commands go through Django's management
utility; anything else prints the usage and exits 2.
"""
import os
import sys

LAB_COMMANDS = ("count", "sums", "numerology", "transversality", "report")

USAGE = """usage: manage.py <command> [options]

lab commands:
  count           exact mean values J_{s,d,k}(N)
  sums            exponential sums: moment | probe | eval
  numerology      exponent numerology: report | scan | table | inflation | convergence
  transversality  certificates and probes: conjecture | appendix | bl | squares | minor-order
  report          archived runs

every lab command takes --format json|csv|text, --save, --seed, --threads, --mem-cap
"""


def run(argv=None):
    argv = list(sys.argv if argv is None else argv)
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")

    import django
    from django.core.management import execute_from_command_line, get_commands

    django.setup()
    if len(argv) < 2 or argv[1] in ("-h", "--help", "help"):
        sys.stdout.write(USAGE)
        return 0 if len(argv) >= 2 else 2
    if argv[1] not in LAB_COMMANDS and argv[1] not in get_commands():
        sys.stderr.write(f"unknown command {argv[1]!r}\n\n{USAGE}")
        return 2
    try:
        execute_from_command_line(argv)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0
