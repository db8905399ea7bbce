"""Polynomial-equivalence classification and the conjecture evidence scans.

Graphs stream through as graph6 strings (what the reports retain) or as
Graph values.  Classification hashes the exact decimal coefficient
vector, so two graphs land in one class iff their independence
polynomials are identical as integer sequences.

Merge contract: ``partition_graphs`` over any split of a stream followed
by ``merge_partitions`` equals the single-pass result; the merge is
associative and commutative (dict union with list concatenation per
polynomial key), which is what lets callers fan the stream map out over
workers.  Scans report evidence only: a clean pass means "no
counterexample up to the stated order", never more.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Union

from .canon import canonical_code, enumerate_trees
from .corona import spider_polynomial
from .errors import ResourceLimitError
from .graphs import (
    Graph,
    corona,
    encode_graph6,
    is_connected,
    is_star,
    is_tree,
    parse_graph6,
    path_graph,
    pendant_edges_form_perfect_matching,
    is_claw_free,
)
from .indpoly import independence_polynomial, independence_polynomial_tree
from .polynomials import IntPolynomial
from .roots import all_roots_real, multiplicity_of_minus_one

GraphLike = Union[Graph, str]


def _as_pair(item: GraphLike) -> tuple[str, Graph]:
    if isinstance(item, Graph):
        return encode_graph6(item), item
    return item.strip(), parse_graph6(item)


# -- equivalence classification -------------------------------------------


@dataclass
class PolynomialClass:
    coefficients: tuple[int, ...]
    members: list[str]                      # graph6 strings
    codes: list[str] | None = None          # hex canonical codes, aligned with members
    all_isomorphic: bool | None = None      # None when codes were unavailable

    @property
    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.coefficients)

    def to_json(self) -> dict:
        return {
            "polynomial": [str(c) for c in self.coefficients],
            "members": self.members,
            "canonical_codes": self.codes,
            "all_isomorphic": self.all_isomorphic,
        }


@dataclass
class EquivalenceReport:
    classes: list[PolynomialClass]
    source: str = ""
    graphs_seen: int = 0
    errors: list[str] = field(default_factory=list)

    def nontrivial_classes(self) -> list[PolynomialClass]:
        return [c for c in self.classes if len(c.members) > 1]

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "graphs": self.graphs_seen,
            "classes": [c.to_json() for c in self.classes],
            "errors": self.errors,
        }

    def summary_table(self) -> str:
        lines = [
            f"source: {self.source or '-'}",
            f"graphs: {self.graphs_seen}, classes: {len(self.classes)}, "
            f"nontrivial: {len(self.nontrivial_classes())}",
            f"{'size':>5}  {'iso':>5}  polynomial",
        ]
        for c in self.classes:
            iso = {True: "yes", False: "NO", None: "?"}[c.all_isomorphic]
            lines.append(f"{len(c.members):>5}  {iso:>5}  {IntPolynomial(c.coefficients)}")
        if self.errors:
            lines.append(f"errors: {len(self.errors)}")
        return "\n".join(lines)


def partition_graphs(
    items: Iterable[GraphLike],
) -> tuple[dict[tuple[int, ...], list[str]], int, list[str]]:
    """Map each graph to its exact coefficient key.  Partial results merge
    with ``merge_partitions``."""
    buckets: dict[tuple[int, ...], list[str]] = {}
    errors: list[str] = []
    seen = 0
    for idx, item in enumerate(items):
        try:
            g6, g = _as_pair(item)
            poly = independence_polynomial(g)
        except Exception as exc:  # per-graph failure; the stream continues
            errors.append(f"item {idx}: {exc}")
            continue
        seen += 1
        buckets.setdefault(poly.coeffs, []).append(g6)
    return buckets, seen, errors


def merge_partitions(
    a: tuple[dict, int, list[str]], b: tuple[dict, int, list[str]]
) -> tuple[dict, int, list[str]]:
    """Associative, commutative merge of partial partitions."""
    buckets = {k: list(v) for k, v in a[0].items()}
    for key, members in b[0].items():
        buckets.setdefault(key, []).extend(members)
    return buckets, a[1] + b[1], a[2] + b[2]


def group_by_polynomial(
    items: Iterable[GraphLike],
    source: str = "",
    isomorphism_verdicts: bool = True,
) -> EquivalenceReport:
    """Partition a graph stream into classes of equal independence
    polynomial, with per-class isomorphism verdicts where computable."""
    return report_from_partition(
        partition_graphs(items), source, isomorphism_verdicts
    )


def report_from_partition(
    partition: tuple[dict, int, list[str]],
    source: str = "",
    isomorphism_verdicts: bool = True,
) -> EquivalenceReport:
    """Finalize a (possibly merged) partition into an EquivalenceReport."""
    buckets, seen, errors = partition
    errors = list(errors)
    classes = []
    for key in sorted(buckets, key=lambda k: (len(k), k)):
        members = sorted(buckets[key])
        verdict: bool | None = None
        codes: list[str] | None = None
        if isomorphism_verdicts:
            try:
                codes = [canonical_code(parse_graph6(m)).hex() for m in members]
                verdict = len(set(codes)) == 1
            except ResourceLimitError as exc:
                codes = None
                errors.append(f"isomorphism verdict skipped: {exc}")
        classes.append(PolynomialClass(key, members, codes, verdict))
    return EquivalenceReport(classes, source, seen, errors)


def corona_equivalence_check(g: Graph, h: Graph) -> bool:
    """Whether I(G)=I(H) <=> I(G*)=I(H*); a False is a defect detector."""
    same = independence_polynomial(g) == independence_polynomial(h)
    same_corona = independence_polynomial(corona(g)) == independence_polynomial(corona(h))
    return same == same_corona


# -- spider uniqueness -------------------------------------------------------


@dataclass
class SpiderScanReport:
    max_skeleton: int
    skeletons_checked: int
    matches: list[tuple[int, str]]          # (skeleton order, skeleton graph6)
    skipped_multiplicity: int
    violations: list[str]

    def to_json(self) -> dict:
        return {
            "max_skeleton": self.max_skeleton,
            "skeletons_checked": self.skeletons_checked,
            "matches": [{"order": n, "skeleton": g6} for n, g6 in self.matches],
            "skipped_multiplicity": self.skipped_multiplicity,
            "violations": self.violations,
        }


def spider_uniqueness_scan(max_skeleton: int) -> SpiderScanReport:
    """Confirm over all tree skeletons up to the given order that only the
    stars produce a spider polynomial under the corona.

    Skeletons whose corona polynomial has -1 as a multiple root are
    skipped up front (they cannot match: every spider polynomial has the
    multiplicity exactly 1), and the skip is itself validated.
    """
    if max_skeleton > 8:
        raise ValueError("spider uniqueness scan capped at skeleton order 8")
    checked = 0
    skipped = 0
    matches: list[tuple[int, str]] = []
    violations: list[str] = []
    for n in range(2, max_skeleton + 1):
        for t in enumerate_trees(n):
            checked += 1
            q = independence_polynomial_tree(corona(t))
            expected = (
                independence_polynomial_tree(corona(path_graph(2)))
                if n == 2
                else spider_polynomial(n - 1)
            )
            star = is_star(t)
            if multiplicity_of_minus_one(q) != 1:
                skipped += 1
                if q == expected:
                    violations.append(
                        f"{encode_graph6(t)}: multiple root at -1 yet matches a spider polynomial"
                    )
                if star:
                    violations.append(f"{encode_graph6(t)}: star skipped by multiplicity filter")
                continue
            if q == expected:
                if star:
                    matches.append((n, encode_graph6(t)))
                else:
                    violations.append(
                        f"{encode_graph6(t)}: non-star skeleton matches the spider polynomial"
                    )
            elif star:
                violations.append(
                    f"{encode_graph6(t)}: star skeleton fails to match the spider polynomial"
                )
    return SpiderScanReport(max_skeleton, checked, matches, skipped, violations)


# -- conjecture evidence scans -----------------------------------------------


def well_covered_trees(max_order: int) -> list[Graph]:
    """K_1 plus every corona of a tree on up to max_order/2 vertices; by the
    pendant-matching characterization these are exactly the well-covered
    trees up to max_order."""
    out = [Graph(1)] if max_order >= 1 else []
    for k in range(1, max_order // 2 + 1):
        out.extend(corona(t) for t in enumerate_trees(k))
    return out


def _is_well_covered_tree(g: Graph) -> bool:
    if not is_tree(g):
        return False
    return g.n == 1 or pendant_edges_form_perfect_matching(g)


@dataclass
class Conjecture2Report:
    max_tree_order: int
    graphs_scanned: int
    skipped_disconnected: int
    supporting_matches: int
    counterexamples: list[dict]

    @property
    def clean(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "statement": "connected graph sharing a well-covered tree's polynomial "
            "is itself a well-covered tree",
            "verdict": (
                f"no counterexample up to tree order {self.max_tree_order}"
                if self.clean
                else "COUNTEREXAMPLE FOUND"
            ),
            "max_tree_order": self.max_tree_order,
            "graphs_scanned": self.graphs_scanned,
            "skipped_disconnected": self.skipped_disconnected,
            "supporting_matches": self.supporting_matches,
            "counterexamples": self.counterexamples,
        }

    def to_jsonl_lines(self) -> list[str]:
        lines = [json.dumps(self.to_json())]
        lines.extend(json.dumps(c) for c in self.counterexamples)
        return lines


def conjecture2_scan(
    items: Iterable[GraphLike], max_tree_order: int
) -> Conjecture2Report:
    """Evidence scan: every connected stream graph whose polynomial matches a
    well-covered tree's should itself be a well-covered tree.

    Disconnected stream graphs are skipped with a count (the statement is
    about connected graphs).  Counterexamples, if any, are reported
    verbatim as graph6.
    """
    index: dict[tuple[int, ...], str] = {}
    for t in well_covered_trees(max_tree_order):
        index[independence_polynomial_tree(t).coeffs] = encode_graph6(t)
    scanned = 0
    skipped = 0
    supporting = 0
    counterexamples: list[dict] = []
    for item in items:
        g6, g = _as_pair(item)
        if not is_connected(g):
            skipped += 1
            continue
        scanned += 1
        key = independence_polynomial(g).coeffs
        if key not in index:
            continue
        if _is_well_covered_tree(g):
            supporting += 1
        else:
            counterexamples.append(
                {"graph": g6, "polynomial": [str(c) for c in key], "tree": index[key]}
            )
    return Conjecture2Report(max_tree_order, scanned, skipped, supporting, counterexamples)


@dataclass
class HamidouneReport:
    graphs_scanned: int
    claw_free_count: int
    failures: list[str]                       # claw-free with a nonreal root
    nonreal_contrast: list[str]               # not claw-free, nonreal roots
    nonreal_contrast_count: int = 0
    verdicts: list[tuple[str, bool, bool]] = field(default_factory=list)
    # per-graph (graph6, claw_free, real_rooted); JSON carries the summary

    @property
    def clean(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "statement": "claw-free graphs have real-rooted independence polynomials",
            "verdict": "no failure in scanned corpus" if self.clean else "FAILURE FOUND",
            "graphs_scanned": self.graphs_scanned,
            "claw_free": self.claw_free_count,
            "failures": self.failures,
            "nonreal_contrast_count": self.nonreal_contrast_count,
            "nonreal_contrast_examples": self.nonreal_contrast,
        }

    def to_jsonl_lines(self) -> list[str]:
        lines = [json.dumps(self.to_json())]
        lines.extend(
            json.dumps({"graph": g6, "claw_free": cf, "real_rooted": rr})
            for g6, cf, rr in self.verdicts
        )
        return lines


def hamidoune_scan(
    items: Iterable[GraphLike], tol: float = 1e-9, contrast_examples: int = 10
) -> HamidouneReport:
    """Exact all-real-root certificates for every claw-free graph in the
    stream (Sturm counts weighted by square-free multiplicity must exhaust
    the degree).  Non-claw-free graphs with nonreal roots are tallied for
    contrast, and every graph's (claw-free, real-rooted) verdict is kept on
    the report.  `tol` is unused by the exact certificates and kept for
    callers that post-process reports numerically."""
    del tol
    scanned = 0
    claw_free = 0
    failures: list[str] = []
    contrast: list[str] = []
    contrast_count = 0
    verdicts: list[tuple[str, bool, bool]] = []
    for item in items:
        g6, g = _as_pair(item)
        scanned += 1
        p = independence_polynomial(g)
        real_rooted = all_roots_real(p)
        cf = is_claw_free(g)
        verdicts.append((g6, cf, real_rooted))
        if cf:
            claw_free += 1
            if not real_rooted:
                failures.append(g6)
        elif not real_rooted:
            contrast_count += 1
            if len(contrast) < contrast_examples:
                contrast.append(g6)
    return HamidouneReport(
        scanned, claw_free, failures, contrast, contrast_count, verdicts
    )
