"""
LabCommand: the shared shape of every lab management command.

Common flags (--format, --save, --seed, --threads, --mem-cap), dispatch to
`run_<action>`, report emission, the run archive and the mapping of lab
errors to exit codes.
"""
import logging
import time

from django.core.management.base import BaseCommand, CommandError

from lab.conf import lab_setting
from lab.exceptions import LabError, ResourceCapError
from lab.forms import clean_options
from lab.models import RunRecord, RunStatus
from lab.reports import Format, Report, emit, to_jsonable

logger = logging.getLogger(__name__)

DJANGO_OPTIONS = {"verbosity", "settings", "pythonpath", "traceback", "no_color", "force_color", "skip_checks"}


def add_common_arguments(parser):
    parser.add_argument("--format", choices=Format.values, default=Format.JSON)
    parser.add_argument("--save", action="store_true", help="Archive the report in the run database.")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--threads", type=int)
    parser.add_argument("--mem-cap", type=int, help="Histogram memory cap in bytes.")


class LabCommand(BaseCommand):
    name = None
    # action → help text; empty for commands without sub-actions
    actions = {}

    def add_arguments(self, parser):
        if not self.actions:
            add_common_arguments(parser)
            self.add_action_arguments(None, parser)
            return
        subparsers = parser.add_subparsers(dest="action", required=True, metavar="action")
        for action, help_text in self.actions.items():
            subparser = subparsers.add_parser(action, help=help_text)
            add_common_arguments(subparser)
            self.add_action_arguments(action, subparser)

    def add_action_arguments(self, action, parser):
        raise NotImplementedError

    # ── Helpers for the actions ───────────────────────────────────────────

    def clean(self, form_class, options):
        self.cleaned = clean_options(form_class, options)
        return self.cleaned

    def make_report(self, results, provenance, exactness=None):
        config = {
            **self.cleaned,
            "action": self.action,
            "version": lab_setting("VERSION"),
            "seed": self.seed,
            "threads": self.threads,
        }
        return Report(self.label, config, results, provenance, exactness or {})

    # ── Execution ─────────────────────────────────────────────────────────

    def handle(self, *args, **options):
        self.action = options.get("action")
        self.label = " ".join(part for part in (self.name, self.action) if part)
        self.seed = lab_setting("SEED", options["seed"])
        self.threads = lab_setting("THREADS", options["threads"])
        self.mem_cap = lab_setting("MEM_CAP", options["mem_cap"])
        self.cleaned = {}

        started = time.perf_counter()
        handler = getattr(self, "run_" + (self.action or "default").replace("-", "_"))
        try:
            report = handler(options)
            report.timing = {"seconds": time.perf_counter() - started}
            output = emit(report, options["format"])
        except LabError as exc:
            if options["save"]:
                self._archive_failure(options, exc, time.perf_counter() - started)
            raise CommandError(str(exc), returncode=exc.exit_code) from exc

        logger.info("%s finished in %.3fs", self.label, report.timing["seconds"])
        if options["save"]:
            record = RunRecord.from_report(report)
            self.stderr.write(f"saved run {record.id}")
        self.stdout.write(output, ending="")

    def _archive_failure(self, options, exc, seconds):
        status = RunStatus.RESOURCE_ERROR if isinstance(exc, ResourceCapError) else RunStatus.PARAMETER_ERROR
        config = {key: value for key, value in options.items() if key not in DJANGO_OPTIONS}
        record = RunRecord.objects.create(
            command=self.label,
            status=status,
            config=to_jsonable(config),
            results={"error": str(exc)},
            seconds=seconds,
        )
        self.stderr.write(f"saved failed run {record.id}")
