"""
The run archive.

RunRecord – one lab command invocation saved with `--save`: its resolved
configuration, its results payload and how it ended.
"""
import uuid

from django.db import models


class RunStatus(models.TextChoices):
    OK = "ok", "OK"
    PARAMETER_ERROR = "parameter-error", "Parameter error"
    RESOURCE_ERROR = "resource-error", "Resource cap exceeded"


class RunRecord(models.Model):
    """A saved lab run."""

    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    command = models.CharField(max_length=64)
    status = models.CharField(max_length=20, choices=RunStatus.choices, default=RunStatus.OK)

    # ── Payload ───────────────────────────────────────────────────────────
    config = models.JSONField(default=dict)
    results = models.JSONField(default=dict, blank=True)
    provenance = models.JSONField(default=dict, blank=True)
    seconds = models.FloatField(null=True, blank=True)

    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ["-created_at"]

    def __str__(self):
        return f"{self.command} ({self.get_status_display()})"

    @classmethod
    def from_report(cls, report):
        data = report.as_dict()
        return cls.objects.create(
            command=report.command,
            config=data["config"],
            results=data["results"],
            provenance=data["provenance"],
            seconds=report.timing.get("seconds"),
        )

    def summary(self):
        return {
            "id": str(self.id),
            "command": self.command,
            "status": self.status,
            "created_at": self.created_at.isoformat(),
        }

    def as_dict(self):
        return {**self.summary(), "seconds": self.seconds, "config": self.config}
