from counting.counts import count_sweep
from counting.exponents import lower_bound_exponent, regime_analysis, upper_bound_exponent
from lab.exceptions import UnsupportedCaseError
from lab.forms import COUNT_METHODS, CountForm
from lab.management.base import LabCommand
from lab.reports import Provenance
from monomials.systems import enumerate_indices


class Command(LabCommand):
    help = "Count J_{s,d,k}(N) exactly; --N-range gives a table, --bounds adds the exponent bookkeeping."
    name = "count"

    def add_action_arguments(self, action, parser):
        parser.add_argument("--d", type=int)
        parser.add_argument("--k", type=int)
        parser.add_argument("--s", type=int)
        parser.add_argument("--N", type=int)
        parser.add_argument("--N-range", help="Inclusive range lo:hi of N values.")
        parser.add_argument("--method", choices=list(COUNT_METHODS), default="mitm")
        parser.add_argument("--split", type=int)
        parser.add_argument("--linear", action="store_true", help="The linear fixture Φ(x) = x.")
        parser.add_argument("--bounds", action="store_true")

    def run_default(self, options):
        cleaned = self.clean(CountForm, options)
        system = enumerate_indices(cleaned["d"], cleaned["k"], linear=cleaned["linear"])
        rows = count_sweep(
            system,
            cleaned["s"],
            cleaned["N_range"] or [cleaned["N"]],
            method=COUNT_METHODS[cleaned["method"]],
            split=cleaned["split"],
            workers=self.threads,
            mem_cap=self.mem_cap,
        )
        results = {"system": system.describe(), "rows": rows}
        provenance = {"system": Provenance.EXACT, "rows": Provenance.EXACT}
        if cleaned["bounds"]:
            results["bounds"] = self._bounds(cleaned["d"], cleaned["k"], cleaned["s"])
            provenance["bounds"] = Provenance.EXACT
        return self.make_report(results, provenance, {"J": True, "slope": False})

    @staticmethod
    def _bounds(d, k, s):
        lower = lower_bound_exponent(d, k, s)
        try:
            upper = str(upper_bound_exponent(d, k, s))
        except UnsupportedCaseError:
            upper = "conjectural only"
        return {
            "lower": {"exponent": lower.exponent, "dominating": list(lower.dominating)},
            "upper": upper,
            "regimes": [regime.as_dict() for regime in regime_analysis(d, k)],
        }
