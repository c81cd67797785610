import logging
import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from ..brackets import bv_laplacian, check_zimes, delta_squared, evolutionary_commutator, jacobiator, \
    laplacian_shortcut, schouten_old
from ..calculus import euler, total_derivative
from ..cohomology import cohomologous, find_primitive, is_exact
from ..dsl import parse_expression, parse_functional, render_text
from ..expr import Expression, FieldKind, Side
from ..geometric import evaluate_terminal, expand_jacobi_geometric, geometric_bracket, lift
from . import fixtures
from .sampling import random_expression, random_functional

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20160310
RANDOM_SAMPLES = 50
ROUND_TRIP_SAMPLES = 200

CheckOutcome = Tuple[bool, str]


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one reproduction check.

    Attributes:
        name (str): Short description.
        passed (bool): Verdict.
        blocking (bool): Whether a failure fails the suite.
        detail (str): Human-readable summary of what was compared.
        elapsed (float): Wall time in seconds.
    """
    name: str
    passed: bool
    blocking: bool
    detail: str
    elapsed: float

    def export(self) -> Dict:
        return {"name": self.name, "passed": self.passed, "blocking": self.blocking, "detail": self.detail,
                "elapsed": round(self.elapsed, 3)}


def _density(source: str) -> Expression:
    return parse_functional(source).density


def _multiset_diff(ours: Expression, theirs: Expression) -> Tuple[int, int]:
    """Numbers of (monomial, coefficient) pairs only in ours and only in theirs."""
    mine, other = dict(ours.items()), dict(theirs.items())
    only_ours = sum(1 for key, c in mine.items() if other.get(key) != c)
    only_theirs = sum(1 for key, c in other.items() if mine.get(key) != c)
    return only_ours, only_theirs


class ReproductionSuite:
    """The reproduction checks on the worked example, with their random samples."""

    def __init__(self, seed: int = DEFAULT_SEED, samples: int = RANDOM_SAMPLES,
                 round_trips: int = ROUND_TRIP_SAMPLES):
        self.seed = seed
        self.samples = samples
        self.round_trips = round_trips
        self.F, self.G, self.H = fixtures.reference_functionals()
        self._single_residual = None

    def rng(self, salt: int) -> random.Random:
        return random.Random(self.seed * 1000 + salt)

    @property
    def single_residual(self) -> Expression:
        if self._single_residual is None:
            self._single_residual = jacobiator(self.F, self.G, self.H).density
        return self._single_residual

    def brace_derivative(self) -> Expression:
        return -total_derivative(fixtures.residual_primitive(), "x")

    # -------------------------------------------------------- blocking checks

    def golden_brackets(self) -> CheckOutcome:
        pairs = {"FG": (self.F, self.G, fixtures.BRACKET_FG), "GH": (self.G, self.H, fixtures.BRACKET_GH),
                 "FH": (self.F, self.H, fixtures.BRACKET_FH)}
        failed = [name for name, (a, b, source) in pairs.items() if schouten_old(a, b).density != _density(source)]
        return not failed, f"mismatched: {', '.join(failed)}" if failed else "FG, GH, FH exact"

    def euler_table(self) -> CheckOutcome:
        failed = []
        for density, field, expected in fixtures.EULER_TABLE:
            kind = FieldKind.ODD if field == "qd" else FieldKind.EVEN
            if euler(parse_expression(density), kind, 1, Side.LEFT) != parse_expression(expected):
                failed.append(f"d({density})/d{field}")
        return not failed, f"mismatched: {', '.join(failed)}" if failed else f"{len(fixtures.EULER_TABLE)} entries exact"

    def laplacian_check(self) -> CheckOutcome:
        for name, functional in (("F", self.F), ("H", self.H)):
            if not is_exact(bv_laplacian(functional).density).is_trivial:
                return False, f"Laplacian of {name} is not trivial"
        rng = self.rng(3)
        for _ in range(self.samples):
            K = random_functional(rng, grading=rng.choice([1, 2]))
            if not cohomologous(bv_laplacian(K).density, laplacian_shortcut(K).density):
                return False, f"shortcut differs on {render_text(K)}"
        return True, f"ΔF ≅ 0, ΔH ≅ 0, shortcut on {self.samples} samples"

    def zimes_counterexample(self) -> CheckOutcome:
        report = check_zimes(self.F, self.H)
        rhs_zero = report.rhs_density.is_zero
        lhs_class = cohomologous(report.lhs_density, parse_expression(fixtures.ZIMES_LHS_CLASS))
        passed = rhs_zero and lhs_class and not report.cohomologically_equal
        return passed, (f"rhs zero: {rhs_zero}, lhs class matches: {lhs_class}, "
                        f"identity fails: {not report.cohomologically_equal}")

    def jacobi_single(self) -> CheckOutcome:
        residual = self.single_residual
        trivial = is_exact(residual).is_trivial
        matches = cohomologous(residual, self.brace_derivative())
        primitive = find_primitive(residual)
        return trivial and matches, (f"{len(residual)} terms, trivial: {trivial}, ≅ -D_x(brace): {matches}, "
                                     f"primitive with {len(primitive)} terms")

    def jacobi_multibase(self) -> CheckOutcome:
        restricted = jacobiator(self.F, self.G, self.H, mode="multibase").rebase("x").density
        single = cohomologous(restricted, self.single_residual)
        brace = cohomologous(restricted, self.brace_derivative())
        return single and brace, f"restricted ≅ single: {single}, ≅ -D_x(brace): {brace}"

    def jacobi_geometric(self) -> CheckOutcome:
        expansion = expand_jacobi_geometric(self.F, self.G, self.H)
        counts = expansion.counts()
        residual = expansion.residual()
        passed = (residual.is_empty and counts["lhs"] == 8 and counts["rhs_signatures"] == 14
                  and counts["rhs_canonical"] == 8)
        return passed, (f"lhs {counts['lhs']} terms, rhs {counts['rhs']} raw in {counts['rhs_signatures']} "
                        f"signatures, {counts['rhs_canonical']} canonical, residual {len(residual)} terms")

    def terminal_oracle(self) -> CheckOutcome:
        pairs = [(self.F, self.G), (self.G, self.H), (self.F, self.H)]
        rng = self.rng(8)
        pairs += [(random_functional(rng), random_functional(rng)) for _ in range(self.samples)]
        for a, b in pairs:
            if evaluate_terminal(geometric_bracket(lift(a), lift(b)), b.base) != schouten_old(a, b).density:
                return False, f"differs on {render_text(a)}, {render_text(b)}"
        return True, f"{len(pairs)} pairs exact"

    def dsl_round_trip(self) -> CheckOutcome:
        rng = self.rng(10)
        for _ in range(self.round_trips):
            e = random_expression(rng, terms=4, labels=("x", "y", "z1"), fields=2)
            if parse_expression(render_text(e)) != e:
                return False, f"round trip changes {render_text(e)}"
        for functional in (self.F, self.G, self.H):
            if parse_functional(render_text(functional)) != functional:
                return False, f"round trip changes {render_text(functional)}"
        return True, f"{self.round_trips} expressions and F, G, H"

    # ---------------------------------------------------- non-blocking checks

    def residual_exact_form(self) -> CheckOutcome:
        difference = self.single_residual - self.brace_derivative()
        return difference.is_zero, f"{len(difference)} terms differ"

    def nested_brackets(self) -> CheckOutcome:
        F, G, H = self.F, self.G, self.H
        nested = {
            "F(GH)": (schouten_old(F, schouten_old(G, H)), fixtures.NESTED_F_GH),
            "(FG)H": (schouten_old(schouten_old(F, G), H), fixtures.NESTED_FG_H),
            "G(FH)": (schouten_old(G, schouten_old(F, H)), fixtures.NESTED_G_FH),
        }
        details = []
        for name, (ours, source) in nested.items():
            only_ours, only_theirs = _multiset_diff(ours.density, parse_expression(source))
            if only_ours or only_theirs:
                details.append(f"{name}: {only_ours} ours / {only_theirs} displayed")
        return not details, "; ".join(details) if details else "all three exact"

    def multibase_display(self) -> CheckOutcome:
        ours = jacobiator(self.F, self.G, self.H, mode="multibase").density
        theirs = fixtures.multibase_residual()
        only_ours, only_theirs = _multiset_diff(ours, theirs)
        if not only_ours and not only_theirs:
            return True, f"{len(ours)} terms match"
        flipped = _multiset_diff(ours, -theirs)
        detail = f"{only_ours} terms only ours, {only_theirs} only displayed"
        if flipped == (0, 0):
            detail += "; match up to overall sign"
        return False, detail

    def delta_squared_check(self) -> CheckOutcome:
        report = delta_squared(parse_functional("int qd*qd_x*q*q_x dx"))
        return report.cohomologically_equal, (f"Δ² has {len(report.lhs_density)} terms, "
                                              f"trivial: {report.cohomologically_equal}")

    def commutator(self) -> CheckOutcome:
        cases = [("q_x", "q_x"), ("q", "q_x"), ("q_xx", "q^2")]
        failed = [f"[{x}, {y}]" for x, y in cases
                  if not evolutionary_commutator(parse_expression(x), parse_expression(y)).cohomologically_equal]
        return not failed, f"failed: {', '.join(failed)}" if failed else f"{len(cases)} commutators agree"

    def checks(self) -> List[Tuple[str, bool, Callable[[], CheckOutcome]]]:
        return [
            ("golden brackets", True, self.golden_brackets),
            ("counterexample Euler table", True, self.euler_table),
            ("naive Laplacian shortcut", True, self.laplacian_check),
            ("Zimes counterexample", True, self.zimes_counterexample),
            ("Jacobi residual, single base", True, self.jacobi_single),
            ("Jacobi residual, multi-base", True, self.jacobi_multibase),
            ("geometric Jacobi identity", True, self.jacobi_geometric),
            ("terminal evaluation oracle", True, self.terminal_oracle),
            ("DSL round trip", True, self.dsl_round_trip),
            ("residual equals -D_x(brace) exactly", False, self.residual_exact_form),
            ("nested brackets match display", False, self.nested_brackets),
            ("multi-base residual matches display", False, self.multibase_display),
            ("Laplacian squared", False, self.delta_squared_check),
            ("evolutionary commutator", False, self.commutator),
        ]

    def run(self) -> List[CheckResult]:
        results = []
        for name, blocking, check in self.checks():
            start = time.perf_counter()
            try:
                passed, detail = check()
            except ValueError as error:
                passed, detail = False, f"{type(error).__name__}: {error}"
            elapsed = time.perf_counter() - start
            result = CheckResult(name, passed, blocking, detail, elapsed)
            logger.debug(f"Check {name!r} took {elapsed:.3f} s")
            if passed:
                logger.info(f"PASS {name}: {detail}")
            elif blocking:
                logger.error(f"FAIL {name}: {detail}")
            else:
                logger.warning(f"Non-blocking mismatch in {name}: {detail}")
            results.append(result)
        return results


def run_reproduction_suite(seed: int = DEFAULT_SEED, samples: int = RANDOM_SAMPLES) -> List[CheckResult]:
    """Runs every reproduction check; see ReproductionSuite.checks for the list."""
    return ReproductionSuite(seed, samples).run()


def suite_passed(results: List[CheckResult]) -> bool:
    return all(r.passed for r in results if r.blocking)


def render_suite_table(results: List[CheckResult]) -> str:
    width = max((len(r.name) for r in results), default=0)
    lines = []
    for r in results:
        status = "PASS" if r.passed else ("FAIL" if r.blocking else "WARN")
        kind = "blocking" if r.blocking else "stretch "
        lines.append(f"{status}  {kind}  {r.name.ljust(width)}  {r.elapsed:7.3f} s  {r.detail}")
    lines.append(f"{'passed' if suite_passed(results) else 'FAILED'}: "
                 f"{sum(r.passed for r in results)}/{len(results)} checks")
    return "\n".join(lines)
