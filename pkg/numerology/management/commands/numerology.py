from lab.forms import ConvergenceForm, EtaForm, InflationForm, ScanForm
from lab.management.base import LabCommand
from lab.reports import Provenance
from numerology.interpolation import solve_alphas
from numerology.iteration import convergence_profile, convergence_ratio, eta
from numerology.scan import contradiction_scan
from numerology.tables import ball_inflation_constraints, critical_exponent_table

SMALL_DEFAULT_HELP = (
    "Defaults to 2: r = M = 10 with the default u = 1/1000000 breaks u·(2(3/2)^r)^M ≤ 2."
)


class Command(LabCommand):
    help = "Exact exponent numerology of the cubic iteration."
    name = "numerology"
    actions = {
        "report": "η and the rewritten expression for one parameter set.",
        "scan": "Search a p window for a negative rewritten expression.",
        "table": "Critical exponents of the companion systems.",
        "inflation": "Admissible indices for ball inflation.",
        "convergence": "Finite-r partial sums against their limits.",
    }

    def add_action_arguments(self, action, parser):
        if action == "report":
            parser.add_argument("--p", default="20")
            parser.add_argument("--r", type=int, default=2, help=SMALL_DEFAULT_HELP)
            parser.add_argument("--M", type=int, default=2, help=SMALL_DEFAULT_HELP)
            parser.add_argument("--u", default="1/1000000")
            parser.add_argument("--mu", default="0")
            parser.add_argument("--eta-p", default="91/100")
        elif action == "scan":
            parser.add_argument("--eta-p", default="91/100")
            parser.add_argument("--p-window", default="19,20")
            parser.add_argument("--r-max", type=int, default=100)
            parser.add_argument(
                "--M-max",
                type=int,
                default=400,
                help="Largest M tried. Defaults to 400: at eta-p 91/100 the first negative M lies above 200.",
            )
            parser.add_argument("--mu", default="0")
            parser.add_argument("--u", default="1/1000000")
            parser.add_argument("--depth", type=int, default=8)
        elif action == "inflation":
            parser.add_argument("--l", type=int, default=1)
            parser.add_argument("--n", type=int, default=9)
            parser.add_argument("--p", default="20")
        elif action == "convergence":
            parser.add_argument("--p", default="20")
            parser.add_argument("--r-max", type=int, default=30)

    def run_report(self, options):
        cleaned = self.clean(EtaForm, options)
        report = eta(cleaned["p"], cleaned["mu"], cleaned["u"], cleaned["r"], cleaned["M"], cleaned["eta_p"])
        results = {
            **report.as_dict(),
            "coefficients": solve_alphas(cleaned["p"]).as_dict(),
            "convergence_ratio": convergence_ratio(cleaned["p"]),
        }
        return self.make_report(results, {key: Provenance.EXACT for key in results})

    def run_scan(self, options):
        cleaned = self.clean(ScanForm, options)
        result = contradiction_scan(
            cleaned["p_window"],
            cleaned["eta_p"],
            cleaned["r_max"],
            cleaned["M_max"],
            cleaned["mu"],
            cleaned["u"],
            cleaned["depth"],
            workers=self.threads,
        )
        results = result.as_dict()
        # the sign is decided exactly, the reported value of the expression is a float
        exactness = {"expression_sign": True, "expression_value": False}
        return self.make_report(results, {key: Provenance.EXACT for key in results}, exactness)

    def run_table(self, options):
        results = {"rows": critical_exponent_table()}
        return self.make_report(results, {"rows": Provenance.EXACT})

    def run_inflation(self, options):
        cleaned = self.clean(InflationForm, options)
        results = {"inflation": ball_inflation_constraints(cleaned["l"], cleaned["n"], cleaned["p"]).as_dict()}
        return self.make_report(results, {"inflation": Provenance.EXACT})

    def run_convergence(self, options):
        cleaned = self.clean(ConvergenceForm, options)
        results = {"rows": convergence_profile(cleaned["p"], cleaned["r_max"])}
        return self.make_report(results, {"rows": Provenance.EXACT})
