"""Named invariant suites behind ``coronapoly verify``.

Each suite sweeps a graph corpus (an ingested graph6 stream, or the
built-in catalog of connected graphs when none is given) and records a
failure message per violated instance.  Everything here is exact; a
suite passes iff no instance fails.  Per-graph checks are exposed as
top-level functions of (suite, graph6) so the CLI can fan a stream out
over worker processes and merge the results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .canon import enumerate_graphs
from .corona import (
    coefficient_monotonicity_check,
    corona_coefficients,
    corona_polynomial_identity,
    divisibility_check,
)
from .graphs import Graph, alpha, complete_graph, corona, encode_graph6, parse_graph6
from .indpoly import independence_polynomial
from .roots import (
    build_hk,
    count_distinct_real_roots,
    multiplicity_of_minus_one,
    negative_tail_sign_check,
    root_bijection_check,
    verify_bounds,
)

SUITES = (
    "corona-identities",
    "divisibility",
    "multiplicity",
    "bijection",
    "bounds",
    "monotonicity",
    "hk",
    "no-root-below-minus-one",
)

_SIGN_SAMPLES = (Fraction(-3, 2), Fraction(-2), Fraction(-7, 3), Fraction(-100))


@dataclass
class SuiteResult:
    suite: str
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failures": self.failures,
            "pass": self.passed,
        }

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"suite {self.suite}: {self.checked} instances, {len(self.failures)} failures: {verdict}"


def default_corpus(max_n: int) -> list[Graph]:
    """Connected graphs on 1..max_n vertices from the built-in catalog."""
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(enumerate_graphs(n, connected=True))
    return out


def check_one(suite: str, g: Graph, tol: float = 1e-9) -> str | None:
    """Run one suite instance; None on pass, else a failure message."""
    n = g.n
    if suite == "corona-identities":
        s = independence_polynomial(g)
        by_sum = corona_coefficients(s, n)
        by_identity = corona_polynomial_identity(s, n)
        direct = independence_polynomial(corona(g))
        if not (by_sum == by_identity == direct):
            return f"{encode_graph6(g)}: corona coefficient routes disagree"
        from .corona import inverse_corona_coefficients

        if inverse_corona_coefficients(by_sum, n, s.degree) != s:
            return f"{encode_graph6(g)}: inverse transform does not round-trip"
        return None
    if suite == "divisibility":
        if g.num_edges == 0:
            return None
        count, power, ok = divisibility_check(g)
        if not ok:
            return f"{encode_graph6(g)}: {count} not divisible by 2^{power}"
        return None
    if suite == "multiplicity":
        if g.num_edges == 0:
            return None
        m = multiplicity_of_minus_one(independence_polynomial(corona(g)))
        expect = n - alpha(g)
        if m != expect:
            return f"{encode_graph6(g)}: multiplicity {m} != {expect}"
        return None
    if suite == "bijection":
        report = root_bijection_check(g, tol)
        if not report.passed:
            return f"{encode_graph6(g)}: {'; '.join(report.notes) or 'bijection failed'}"
        return None
    if suite == "bounds":
        if n < 2:
            return None
        report = verify_bounds(g, tol)
        bad = [b.name for b in report.bounds.values() if b.applicable and not b.passed]
        if bad:
            return f"{encode_graph6(g)}: failed bounds {bad}"
        return None
    if suite == "monotonicity":
        t = corona_coefficients(independence_polynomial(g), n)
        if not coefficient_monotonicity_check(t, n):
            return f"{encode_graph6(g)}: corona coefficients not monotone to ceil(n/2)"
        return None
    if suite == "no-root-below-minus-one":
        if g.num_edges == 0:
            return None
        q = independence_polynomial(corona(g))
        below = count_distinct_real_roots(q, None, Fraction(-1), include_hi=False)
        if below != 0:
            return f"{encode_graph6(g)}: corona polynomial has a real root < -1"
        if not negative_tail_sign_check(g, _SIGN_SAMPLES):
            return f"{encode_graph6(g)}: sign of I(G*;x) wrong for x < -1"
        return None
    raise ValueError(f"unknown suite {suite!r}")


def check_one_g6(args: tuple[str, str, float]) -> str | None:
    """Picklable worker: (suite, graph6, tol) -> failure message or None."""
    suite, g6, tol = args
    return check_one(suite, parse_graph6(g6), tol)


def run_hk_suite(max_k: int = 4) -> SuiteResult:
    """Iterated coronas of K_2: exact root at -1/k for k = 1..max_k."""
    result = SuiteResult("hk", 0)
    seed = complete_graph(2)
    for k in range(1, max_k + 1):
        result.checked += 1
        _, ok = build_hk(seed, k)
        if not ok:
            result.failures.append(f"k={k}: I(H_k;-1/k) != 0")
    return result


def run_suite(
    suite: str,
    graphs: list[Graph] | None = None,
    max_n: int = 7,
    tol: float = 1e-9,
) -> SuiteResult:
    if suite == "hk":
        return run_hk_suite(max_k=max_n if max_n else 4)
    if graphs is None:
        graphs = default_corpus(max_n)
    result = SuiteResult(suite, 0)
    for g in graphs:
        result.checked += 1
        msg = check_one(suite, g, tol)
        if msg is not None:
            result.failures.append(msg)
    return result
