from lab.exceptions import ParameterError
from lab.forms import ArchiveForm
from lab.management.base import LabCommand
from lab.models import RunRecord


class Command(LabCommand):
    help = "List archived runs, or replay one with --id."
    name = "report"

    def add_action_arguments(self, action, parser):
        parser.add_argument("--last", type=int, default=10)
        parser.add_argument("--id")

    def run_default(self, options):
        cleaned = self.clean(ArchiveForm, options)
        if cleaned["id"] is None:
            records = RunRecord.objects.all()[:cleaned["last"]]
            return self.make_report({"rows": [record.summary() for record in records]}, {})
        try:
            record = RunRecord.objects.get(pk=cleaned["id"])
        except RunRecord.DoesNotExist:
            raise ParameterError(f"no archived run {cleaned['id']}")
        self.cleaned["archived"] = record.as_dict()
        return self.make_report(record.results, record.provenance)
