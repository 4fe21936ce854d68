import json
from pathlib import Path

import numpy as np

from lab.conf import lab_setting
from lab.exceptions import ParameterError
from lab.forms import AppendixForm, BrascampLiebForm, ConjectureForm, MinorOrderForm, SquaresForm
from lab.management.base import LabCommand
from lab.reports import Provenance
from transversality.appendix import appendix_lemma_checks
from transversality.brascamp_lieb import PointConfig, bl_condition_check, bl_rank_implication
from transversality.minors import required_minor_order, verify_conjecture_samples
from transversality.squares import full_collection, square_transversality_probe


class Command(LabCommand):
    help = "Exact rank certificates and transversality probes for the cubic surface in two variables."
    name = "transversality"
    actions = {
        "conjecture": "Certify non-vanishing minors on random subspaces.",
        "appendix": "Exact ranks of projected cubic spaces at random points.",
        "bl": "Check the Brascamp–Lieb dimension condition on sampled subspaces.",
        "squares": "Heuristic ν-transversality of squares in Col_K.",
        "minor-order": "The minor order a subspace of given dimension needs.",
    }

    def add_action_arguments(self, action, parser):
        if action in ("conjecture", "bl", "minor-order"):
            parser.add_argument("--l", type=int, default=2)
        if action == "conjecture":
            parser.add_argument("--dims", default="2,4,6,8")
            parser.add_argument("--trials", type=int, default=100)
        elif action == "appendix":
            parser.add_argument("--trials", type=int, default=200)
        elif action == "bl":
            parser.add_argument("--points", help="JSON file with a list of [r, s] pairs or {points, square_side}.")
            parser.add_argument("--random-points", type=int)
            parser.add_argument("--squares", help="Square indices i,j;i,j;... (needs --K).")
            parser.add_argument("--K", type=int)
            parser.add_argument("--samples", type=int, default=500)
        elif action == "squares":
            parser.add_argument("--K", type=int, default=8)
            parser.add_argument("--degree", type=int, default=2)
            parser.add_argument("--squares", help="Square indices i,j;i,j;... (default: all of Col_K).")
            parser.add_argument("--poly-samples", type=int, default=200)
            parser.add_argument("--point-samples", type=int, default=8)
        elif action == "minor-order":
            parser.add_argument("--dim", type=int)
            parser.add_argument("--d", type=int, default=2)
            parser.add_argument("--k", type=int, default=3)

    def run_conjecture(self, options):
        cleaned = self.clean(ConjectureForm, options)
        reports = verify_conjecture_samples(
            cleaned["l"], cleaned["dims"], cleaned["trials"], self.seed,
            box=lab_setting("SUBSPACE_BOX"), workers=self.threads,
        )
        rows = [
            {key: value for key, value in report.as_dict().items() if key not in ("failures", "certificates")}
            for report in reports
        ]
        results = {"rows": rows, "dimensions": [report.as_dict() for report in reports]}
        return self.make_report(results, {"rows": Provenance.EXACT, "dimensions": Provenance.EXACT})

    def run_appendix(self, options):
        cleaned = self.clean(AppendixForm, options)
        checks = appendix_lemma_checks(self.seed, cleaned["trials"])
        results = {"checks": {name: check.as_dict() for name, check in checks.items()}}
        return self.make_report(results, {"checks": Provenance.EXACT})

    def run_bl(self, options):
        cleaned = self.clean(BrascampLiebForm, options)
        if cleaned["points"]:
            points = PointConfig.from_json(self._read_points(cleaned["points"]))
        elif cleaned["squares"]:
            points = PointConfig.from_squares(cleaned["squares"], cleaned["K"])
        else:
            points = PointConfig.random(cleaned["random_points"], np.random.default_rng(self.seed))
        results = {
            "points": points.as_dict(),
            "condition": bl_condition_check(points, cleaned["l"], cleaned["samples"], self.seed),
            "rank_implication": {str(m): bl_rank_implication(m) for m in range(1, 10)},
        }
        provenance = {
            "points": Provenance.EXACT,
            "condition": Provenance.HEURISTIC,
            "rank_implication": Provenance.EXACT,
        }
        return self.make_report(results, provenance)

    @staticmethod
    def _read_points(path):
        try:
            return json.loads(Path(path).read_text())
        except OSError as exc:
            raise ParameterError(f"cannot read points file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParameterError(f"points file {path} is not JSON: {exc}") from exc

    def run_squares(self, options):
        cleaned = self.clean(SquaresForm, options)
        squares = cleaned["squares"] or full_collection(cleaned["K"])
        result = square_transversality_probe(
            squares,
            cleaned["K"],
            cleaned["degree"],
            cleaned["poly_samples"],
            cleaned["point_samples"],
            self.seed,
        )
        return self.make_report({"probe": result.as_dict()}, {"probe": Provenance.HEURISTIC}, {"probe": False})

    def run_minor_order(self, options):
        cleaned = self.clean(MinorOrderForm, options)
        order, feasible = required_minor_order(cleaned["dim"], cleaned["d"], cleaned["k"], cleaned["l"])
        results = {"minor": {"dim": cleaned["dim"], "order": order, "feasible": feasible}}
        return self.make_report(results, {"minor": Provenance.EXACT})
