from expsums.probe import box_lower_probe, moment_lower_exponent
from expsums.sums import ExpSumSpec, GridSpec, Method, adequate_grid, eval_exp_sum, quadrature_moment
from lab.forms import EvalForm, MomentForm, ProbeForm
from lab.management.base import LabCommand
from lab.reports import Provenance
from monomials.systems import enumerate_indices


class Command(LabCommand):
    help = "Exponential sums: torus moments by quadrature, the box lower probe, point evaluation."
    name = "sums"
    actions = {
        "moment": "∫|f|^p over the torus by grid quadrature.",
        "probe": "Sampled minimum of |f| on the small box around the origin.",
        "eval": "f at one point.",
    }

    def add_action_arguments(self, action, parser):
        if action in ("moment", "eval"):
            parser.add_argument("--d", type=int)
            parser.add_argument("--k", type=int)
        parser.add_argument("--N", type=int)
        if action == "moment":
            parser.add_argument("--p", type=int)
            parser.add_argument("--grid", default="auto", help="auto or comma-separated sizes m1,m2,...")
            parser.add_argument("--method", choices=Method.values, default=Method.FFT)
        elif action == "probe":
            parser.add_argument("--c", default="1/100")
            parser.add_argument("--samples", type=int, default=10_000)
            parser.add_argument("--q", help="Comma-separated exponents for the implied lower bounds.")
        else:
            parser.add_argument("--x", help="Comma-separated rationals, one per monomial.")

    def run_moment(self, options):
        cleaned = self.clean(MomentForm, options)
        spec = ExpSumSpec(enumerate_indices(cleaned["d"], cleaned["k"]), cleaned["N"])
        grid = GridSpec(cleaned["grid"]) if cleaned["grid"] else None
        estimate = quadrature_moment(
            spec, cleaned["p"], grid, method=cleaned["method"], workers=self.threads, seed=self.seed,
        )
        results = {
            "system": spec.system.describe(),
            "moment": estimate.as_dict(),
            "adequate_grid": adequate_grid(spec, cleaned["p"]).as_dict(),
        }
        provenance = {
            "system": Provenance.EXACT,
            "moment": Provenance.QUADRATURE if estimate.mode == "grid" else Provenance.HEURISTIC,
            "adequate_grid": Provenance.EXACT,
        }
        if estimate.exact:
            # an exact even moment with unit coefficients is the count J_{p/2}
            results["J"] = round(estimate.value)
            provenance["J"] = Provenance.QUADRATURE
        return self.make_report(results, provenance, {"moment": estimate.exact})

    def run_probe(self, options):
        cleaned = self.clean(ProbeForm, options)
        qs = cleaned["q"] or []
        result = box_lower_probe(cleaned["N"], cleaned["c"], cleaned["samples"], self.seed)
        results = {
            "probe": result.as_dict(qs),
            "lp_lower_bounds": {str(q): result.lp_lower_bound(q) for q in qs},
            "moment_lower_exponents": {str(q): moment_lower_exponent(q) for q in qs},
        }
        provenance = {
            "probe": Provenance.HEURISTIC,
            "lp_lower_bounds": Provenance.HEURISTIC,
            "moment_lower_exponents": Provenance.EXACT,
        }
        return self.make_report(results, provenance, {"probe": False})

    def run_eval(self, options):
        cleaned = self.clean(EvalForm, options)
        spec = ExpSumSpec(enumerate_indices(cleaned["d"], cleaned["k"]), cleaned["N"])
        value = eval_exp_sum(spec, cleaned["x"])
        results = {"x": cleaned["x"], "value": {"re": value.real, "im": value.imag, "abs": abs(value)}}
        return self.make_report(results, {"x": Provenance.EXACT, "value": Provenance.QUADRATURE}, {"value": False})
