"""Inequalities between topological indices, checked one graph at a time.

Each ``check_*`` function evaluates both sides of one inequality on a graph
and returns a :class:`BoundCheck`.  When both sides are rational (or a
square root of a rational compared against an integer) the comparison is
exact; otherwise it is made with an absolute tolerance of ``FLOAT_TOL``.

Hypotheses are tested before either side is evaluated; a check whose
hypotheses fail is *not applicable* and never counts as a violation.
Where an equality characterisation is known to be wrong or a strict
inequality is attained, the check still holds but carries a
``discrepancy`` note.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .formats import write_graph6
from .graph import Graph, GraphError, is_regular, is_star, is_tree
from .indices import Invariants, bipartite_diam3_mostar_form, invariants

FLOAT_TOL = 1e-8
NEAR_EQUALITY = 1e-6

Number = Union[int, Fraction, float]


@dataclass
class BoundCheck:
    """One inequality evaluated on one graph.

    ``sense`` is ``"<="``, ``">="`` or ``"=="``.  ``slack`` is signed so that
    a nonnegative value means the inequality holds (``rhs - lhs`` for
    ``<=``, ``lhs - rhs`` for ``>=``).  For floating comparisons
    ``equality`` means ``|slack| <= NEAR_EQUALITY`` and is informational.
    """

    bound_id: str
    graph6: str
    applicable: bool
    reason: str = ""
    sense: str = "<="
    lhs: Number | None = None
    rhs: Number | None = None
    holds: bool | None = None
    slack: Number | None = None
    equality: bool | None = None
    exact: bool = True
    discrepancy: str | None = None
    extras: dict = field(default_factory=dict)

    @property
    def violation(self) -> bool:
        return self.applicable and not self.holds


def _descriptor(inv: Invariants) -> str:
    g = inv.graph
    return write_graph6(g) if g.n <= 62 else f"n={g.n},m={g.m}"


def _not_applicable(bound_id: str, inv: Invariants, reason: str) -> BoundCheck:
    return BoundCheck(bound_id, _descriptor(inv), False, reason)


def _exact(bound_id: str, inv: Invariants, lhs, rhs, sense: str = "<=", **extras) -> BoundCheck:
    slack = lhs - rhs if sense == ">=" else rhs - lhs
    holds = slack == 0 if sense == "==" else slack >= 0
    return BoundCheck(
        bound_id, _descriptor(inv), True, sense=sense, lhs=lhs, rhs=rhs,
        holds=holds, slack=slack, equality=slack == 0, extras=extras,
    )


def _float(bound_id: str, inv: Invariants, lhs: float, rhs: float, **extras) -> BoundCheck:
    slack = float(rhs) - float(lhs)
    return BoundCheck(
        bound_id, _descriptor(inv), True, lhs=float(lhs), rhs=float(rhs),
        holds=slack >= -FLOAT_TOL, slack=slack, equality=abs(slack) <= NEAR_EQUALITY,
        exact=False, extras=extras,
    )


def _exact_sqrt(bound_id: str, inv: Invariants, lhs: int, radicand: Fraction, **extras) -> BoundCheck:
    """``lhs <= sqrt(radicand)`` for a nonnegative integer lhs, decided by squaring."""
    if radicand < 0:
        chk = _not_applicable(bound_id, inv, f"negative radicand {radicand}: bound ill-posed")
        chk.extras = dict(extras, radicand=radicand, ill_posed=True)
        return chk
    rhs = math.sqrt(radicand)
    return BoundCheck(
        bound_id, _descriptor(inv), True, lhs=lhs, rhs=rhs,
        holds=lhs * lhs <= radicand, slack=rhs - lhs, equality=lhs * lhs == radicand,
        extras=dict(extras, radicand=radicand),
    )


def _require(inv: Invariants, *, connected=False, edges=False, bipartite=False, diameter=None) -> str | None:
    if edges and inv.m == 0:
        return "graph has no edges"
    if connected and not inv.connected:
        return "graph is disconnected"
    if bipartite and not inv.bipartition.is_bipartite:
        return "graph is not bipartite"
    if diameter is not None and inv.diameter != diameter:
        return f"diameter is {inv.diameter}, need {diameter}"
    return None


# Degree-based bounds


def check_var_irr(graph: Graph | Invariants) -> BoundCheck:
    """Degree variance is at least ``Irr^2 / (m n^2)``."""
    inv = invariants(graph)
    if why := _require(inv, edges=True, connected=True):
        return _not_applicable("var_irr", inv, why)
    n, m = inv.n, inv.m
    chk = _exact("var_irr", inv, inv.degree_variance, Fraction(inv.albertson**2, m * n * n), ">=")
    regular = is_regular(inv.graph)
    chk.extras["regular"] = regular
    if chk.equality and not regular:
        chk.discrepancy = "equality attained by a non-regular graph"
    elif regular and not chk.equality:
        chk.holds = False
        chk.reason = "regular graph without equality"
    return chk


def check_zagreb_lower(graph: Graph | Invariants) -> BoundCheck:
    """``M1 >= 4m^2/n + Irr^2/(mn)``, sharpening the classical ``4m^2/n``."""
    inv = invariants(graph)
    if why := _require(inv, edges=True):
        return _not_applicable("zagreb_lower", inv, why)
    n, m = inv.n, inv.m
    classical = Fraction(4 * m * m, n)
    gain = Fraction(inv.albertson**2, m * n)
    return _exact("zagreb_lower", inv, inv.first_zagreb, classical + gain, ">=",
                  classical=classical, improvement=gain)


# Energy bounds


def check_mcclelland(graph: Graph | Invariants) -> BoundCheck:
    inv = invariants(graph)
    return _float("mcclelland", inv, inv.energy, math.sqrt(2 * inv.m * inv.n))


def check_energy_sqrtdeg(graph: Graph | Invariants) -> BoundCheck:
    """Energy is at most the sum of square roots of the degrees."""
    inv = invariants(graph)
    return _float("energy_sqrtdeg", inv, inv.energy, inv.sqrt_degree_sum)


def check_energy_irb(graph: Graph | Invariants) -> BoundCheck:
    """``E <= sqrt(2mn - IRB)``.

    Also checks that the bound is no worse than McClelland's and the two
    intermediate inequalities that lead to it:
    ``IRB <= (lambda_max/n)(2mn - S^2) <= 2mn - S^2`` with ``S`` the
    square-root degree sum.
    """
    inv = invariants(graph)
    if why := _require(inv, connected=True):
        return _not_applicable("energy_irb", inv, why)
    n, m = inv.n, inv.m
    s2 = inv.sqrt_degree_sum**2
    mid = inv.lambda_max / n * (n * 2 * m - s2)
    top = 2 * m * n - s2
    mcc = math.sqrt(2 * m * n)
    chk = _float("energy_irb", inv, inv.energy, math.sqrt(max(2 * m * n - inv.irb, 0.0)),
                 mcclelland=mcc, chain=(inv.irb, mid, top))
    chain_ok = inv.irb <= mid + FLOAT_TOL and mid <= top + FLOAT_TOL
    not_worse = chk.rhs <= mcc + FLOAT_TOL
    if not (chain_ok and not_worse):
        chk.holds = False
        chk.reason = "intermediate chain failed" if not chain_ok else "exceeds McClelland bound"
    return chk


def check_koolen_moulton(graph: Graph | Invariants) -> BoundCheck:
    """``E <= 2m/n + sqrt((n-1)(2m - (2m/n)^2))`` when ``2m > n``.

    ``extras['tighter']`` names whichever of this bound and the IRB bound
    is smaller on this graph (only reported).
    """
    inv = invariants(graph)
    n, m = inv.n, inv.m
    if not 2 * m > n:
        return _not_applicable("koolen_moulton", inv, f"needs 2m > n, have 2m={2 * m}, n={n}")
    avg = 2 * m / n
    rhs = avg + math.sqrt(max((n - 1) * (2 * m - avg * avg), 0.0))
    chk = _float("koolen_moulton", inv, inv.energy, rhs)
    if inv.connected:
        irb_rhs = math.sqrt(max(2 * m * n - inv.irb, 0.0))
        chk.extras["energy_irb_rhs"] = irb_rhs
        if abs(irb_rhs - rhs) <= NEAR_EQUALITY:
            chk.extras["tighter"] = "tie"
        else:
            chk.extras["tighter"] = "koolen_moulton" if rhs < irb_rhs else "energy_irb"
    return chk


# Mostar bounds


def check_mostar_trivial(graph: Graph | Invariants) -> BoundCheck:
    """``0 <= Mo <= m(n-2)``; right equality exactly for stars."""
    inv = invariants(graph)
    if inv.n < 3:
        return _not_applicable("mostar_trivial", inv, "needs n >= 3")
    if why := _require(inv, connected=True):
        return _not_applicable("mostar_trivial", inv, why)
    mo = inv.mostar
    chk = _exact("mostar_trivial", inv, mo, inv.m * (inv.n - 2), left_equality=mo == 0)
    if mo < 0:
        chk.holds = False
    star = is_star(inv.graph)
    if chk.equality != star:
        chk.discrepancy = "right equality does not match star detection"
    return chk


def check_diameter2_mostar(graph: Graph | Invariants) -> BoundCheck:
    """Mostar and Albertson indices coincide on diameter-2 graphs."""
    inv = invariants(graph)
    if why := _require(inv, connected=True, diameter=2):
        return _not_applicable("diameter2_mostar", inv, why)
    return _exact("diameter2_mostar", inv, inv.mostar, inv.albertson, "==")


def check_tree_mostar(graph: Graph | Invariants) -> BoundCheck:
    """On trees ``Mo >= Irr`` with equality only for stars, and both have the same parity."""
    inv = invariants(graph)
    if not is_tree(inv.graph):
        return _not_applicable("tree_mostar", inv, "graph is not a tree")
    mo, irr = inv.mostar, inv.albertson
    chk = _exact("tree_mostar", inv, mo, irr, ">=", same_parity=(mo - irr) % 2 == 0)
    star = is_star(inv.graph)
    chk.extras["star"] = star
    if not chk.extras["same_parity"]:
        chk.holds = False
        chk.reason = "parity differs"
    elif chk.equality != star:
        chk.discrepancy = "equality does not match star detection"
    return chk


def _diam3_polynomial(inv: Invariants) -> int:
    n, m = inv.n, inv.m
    n1, n2 = inv.bipartition.n1, inv.bipartition.n2
    return (n1 * n2 * n * n - 4 * m * n * n + 4 * inv.first_zagreb * n
            - 4 * n1 * n1 * n2 * n2 - 16 * m * m + 16 * n1 * n2 * m)


def check_bipartite_diam3(graph: Graph | Invariants) -> BoundCheck:
    """Spectral Mostar bound for bipartite graphs of diameter three.

    ``Mo <= sqrt(m * (lambda_max/n) * P)`` where ``P`` is an integer
    polynomial in ``n1, n2, n, m, M1``.  The degree-only Mostar formula for
    this class is cross-checked against the distance-based value.
    """
    inv = invariants(graph)
    if why := _require(inv, connected=True, bipartite=True, diameter=3):
        return _not_applicable("bipartite_diam3", inv, why)
    poly = _diam3_polynomial(inv)
    extras = {"polynomial": poly, "mostar_form": bipartite_diam3_mostar_form(inv.graph)}
    if poly < 0:
        chk = _not_applicable("bipartite_diam3", inv, f"negative radicand {poly}: bound ill-posed")
        chk.extras = dict(extras, ill_posed=True)
        return chk
    lam = inv.lambda_max
    rhs = math.sqrt(inv.m * lam / inv.n * poly)
    chk = _float("bipartite_diam3", inv, inv.mostar, rhs,
                 rhs_lambda_n=math.sqrt(inv.m * poly), **extras)
    if extras["mostar_form"] != inv.mostar:
        chk.holds = False
        chk.reason = "degree-only Mostar formula disagrees with distances"
    return chk


def check_goldberg(graph: Graph | Invariants) -> BoundCheck:
    """``Irr <= sqrt(m (n M1 - 4m^2) lambda_max / n)``.

    On balanced bipartite diameter-3 graphs also requires ``Mo = 2 Irr``.
    """
    inv = invariants(graph)
    if why := _require(inv, connected=True):
        return _not_applicable("goldberg", inv, why)
    n, m = inv.n, inv.m
    inner = n * inv.first_zagreb - 4 * m * m
    chk = _float("goldberg", inv, inv.albertson, math.sqrt(max(m * inner * inv.lambda_max / n, 0.0)))
    bp = inv.bipartition
    if bp.is_bipartite and bp.n1 == bp.n2 and inv.diameter == 3:
        twice = inv.mostar == 2 * inv.albertson
        chk.extras["mostar_twice_irr"] = twice
        if not twice:
            chk.holds = False
            chk.reason = "balanced bipartite diameter-3 graph with Mo != 2 Irr"
    return chk


def part_size_bound(n1: int, n2: int) -> float:
    """Mostar upper bound for bipartite diameter-3 graphs in terms of part sizes only."""
    n = n1 + n2
    p = n1 * n2
    root = math.sqrt(4 * p * p + 3 * p * n * n)
    val = p * p * n * n / 3 + (2 * p * p / 27 + p * n * n / 18) * root - 4 * p**3 / 27
    return math.sqrt(val)


def check_part_size(graph: Graph | Invariants) -> BoundCheck:
    inv = invariants(graph)
    if why := _require(inv, connected=True, bipartite=True, diameter=3):
        return _not_applicable("part_size", inv, why)
    n1, n2 = inv.bipartition.n1, inv.bipartition.n2
    rhs = part_size_bound(n1, n2)
    swapped = part_size_bound(n2, n1)
    chk = _float("part_size", inv, inv.mostar, rhs, n1=n1, n2=n2)
    if not math.isclose(rhs, swapped, rel_tol=1e-12):
        chk.holds = False
        chk.reason = "not symmetric in the part sizes"
    return chk


def check_mostar_szeged(graph: Graph | Invariants) -> BoundCheck:
    """``Mo <= sqrt(m^2 n^2 - 4 m Sz)`` on bipartite graphs, decided exactly."""
    inv = invariants(graph)
    if why := _require(inv, connected=True, bipartite=True):
        return _not_applicable("mostar_szeged", inv, why)
    n, m = inv.n, inv.m
    per_edge = all((e.ne_u - e.ne_v) ** 2 == n * n - 4 * e.ne_u * e.ne_v for e in inv.peripherality)
    chk = _exact_sqrt("mostar_szeged", inv, inv.mostar, Fraction(m * m * n * n - 4 * m * inv.szeged),
                      per_edge_identity=per_edge)
    if not per_edge:
        chk.holds = False
        chk.reason = "per-edge split identity failed"
    return chk


def check_triangle_sandwich(graph: Graph | Invariants) -> BoundCheck:
    """``m(4m - n^2)/n <= 3t <= sum of n_uv`` with both slacks reported.

    ``lhs``/``rhs`` are the outer terms; ``equality`` means both
    inequalities are tight.
    """
    inv = invariants(graph)
    if why := _require(inv, connected=True):
        return _not_applicable("triangle_sandwich", inv, why)
    n, m = inv.n, inv.m
    lower = Fraction(m * (4 * m - n * n), n)
    middle = 3 * inv.triangle_count
    upper = inv.sum_n_uv
    lo_slack, hi_slack = middle - lower, upper - middle
    return BoundCheck(
        "triangle_sandwich", _descriptor(inv), True, lhs=lower, rhs=upper,
        holds=lo_slack >= 0 and hi_slack >= 0, slack=min(lo_slack, hi_slack),
        equality=lo_slack == 0 and hi_slack == 0,
        extras={"three_t": middle, "lower_slack": lo_slack, "upper_slack": hi_slack},
    )


def check_dense_mostar(graph: Graph | Invariants) -> BoundCheck:
    """``Mo <= sqrt(m^2(n-2)^2 - m^2(n-2)(4m-n^2)/n)`` for ``m > n^2/4``.

    Claimed strict; complete graphs attain equality, which is reported as a
    discrepancy.  The bound must also improve on ``m(n-2)``.
    """
    inv = invariants(graph)
    n, m = inv.n, inv.m
    if not 4 * m > n * n:
        return _not_applicable("dense_mostar", inv, f"needs m > n^2/4, have m={m}, n={n}")
    if why := _require(inv, connected=True):
        return _not_applicable("dense_mostar", inv, why)
    radicand = Fraction(m * m * (n - 2) ** 2) - Fraction(m * m * (n - 2) * (4 * m - n * n), n)
    chk = _exact_sqrt("dense_mostar", inv, inv.mostar, radicand)
    if not chk.applicable:
        return chk
    chk.extras["strict"] = inv.mostar**2 < radicand
    if radicand > (m * (n - 2)) ** 2:
        chk.holds = False
        chk.reason = "weaker than the trivial bound m(n-2)"
    if chk.holds and not chk.extras["strict"]:
        chk.discrepancy = "strict inequality attained with equality"
    return chk


BOUNDS: dict[str, Callable[[Graph | Invariants], BoundCheck]] = {
    "var_irr": check_var_irr,
    "zagreb_lower": check_zagreb_lower,
    "energy_irb": check_energy_irb,
    "mcclelland": check_mcclelland,
    "koolen_moulton": check_koolen_moulton,
    "energy_sqrtdeg": check_energy_sqrtdeg,
    "diameter2_mostar": check_diameter2_mostar,
    "tree_mostar": check_tree_mostar,
    "mostar_trivial": check_mostar_trivial,
    "bipartite_diam3": check_bipartite_diam3,
    "goldberg": check_goldberg,
    "part_size": check_part_size,
    "mostar_szeged": check_mostar_szeged,
    "triangle_sandwich": check_triangle_sandwich,
    "dense_mostar": check_dense_mostar,
}


def resolve_bounds(ids: Iterable[str] | None) -> list[str]:
    if ids is None:
        return list(BOUNDS)
    ids = list(ids)
    unknown = [b for b in ids if b not in BOUNDS]
    if unknown:
        raise KeyError(f"unknown bound id(s): {', '.join(unknown)}; known: {', '.join(BOUNDS)}")
    return ids


def check_graph(graph: Graph, bound_ids: Sequence[str] | None = None) -> list[BoundCheck]:
    inv = Invariants(graph)
    out = []
    for bid in resolve_bounds(bound_ids):
        try:
            out.append(BOUNDS[bid](inv))
        except GraphError as exc:
            out.append(_not_applicable(bid, inv, str(exc)))
    return out


COUNT_KEYS = ("checked", "applicable", "holds", "equality", "violation", "discrepancy", "not_applicable")


@dataclass
class SuiteResult:
    bound_ids: list[str]
    checks: list[BoundCheck]
    graphs: int

    @property
    def summary(self) -> dict[str, dict[str, int]]:
        counts = {b: dict.fromkeys(COUNT_KEYS, 0) for b in self.bound_ids}
        for c in self.checks:
            row = counts[c.bound_id]
            row["checked"] += 1
            if not c.applicable:
                row["not_applicable"] += 1
                continue
            row["applicable"] += 1
            row["holds"] += bool(c.holds)
            row["equality"] += bool(c.equality)
            row["violation"] += c.violation
            row["discrepancy"] += c.discrepancy is not None
        return counts

    @property
    def violations(self) -> list[BoundCheck]:
        return sorted((c for c in self.checks if c.violation), key=lambda c: (c.bound_id, c.graph6))

    @property
    def discrepancies(self) -> list[BoundCheck]:
        return sorted((c for c in self.checks if c.discrepancy), key=lambda c: (c.bound_id, c.graph6))

    @property
    def ok(self) -> bool:
        return not any(c.violation for c in self.checks)

    def to_json(self, include_checks: bool = True) -> str:
        doc = {
            "summary": {"graphs": self.graphs, "bounds": self.summary},
            "checks": [check_record(c) for c in self.checks] if include_checks else [],
            "violations": [check_record(c) for c in self.violations],
            "discrepancies": [check_record(c) for c in self.discrepancies],
        }
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for c in self.checks:
            w.writerow([c.bound_id, c.graph6, fmt_value(c.lhs), fmt_value(c.rhs),
                        fmt_value(c.slack), _fmt_flag(c.equality), _fmt_flag(c.applicable)])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"graphs: {self.graphs}"]
        width = max(len(b) for b in self.bound_ids) if self.bound_ids else 0
        for b, row in self.summary.items():
            lines.append(f"{b:<{width}}  " + "  ".join(f"{k}={row[k]}" for k in COUNT_KEYS))
        for c in self.violations:
            lines.append(f"VIOLATION {c.bound_id} {c.graph6} lhs={fmt_value(c.lhs)} rhs={fmt_value(c.rhs)} {c.reason}".rstrip())
        for c in self.discrepancies:
            lines.append(f"DISCREPANCY {c.bound_id} {c.graph6}: {c.discrepancy}")
        return "\n".join(lines) + "\n"


CSV_COLUMNS = ("bound_id", "graph6", "lhs", "rhs", "slack", "equality", "applicable")


def _fmt_flag(v: bool | None) -> str:
    return "" if v is None else str(bool(v)).lower()


def fmt_value(v) -> str:
    """Rationals as ``p/q``, integers plainly, floats to 12 significant digits."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return str(v)
    return f"{float(v):.12g}"


def json_value(v):
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return float(f"{v:.12g}") if math.isfinite(v) else str(v)
    if isinstance(v, (tuple, list)):
        return [json_value(x) for x in v]
    if isinstance(v, dict):
        return {k: json_value(x) for k, x in v.items()}
    return json_value(v.item()) if hasattr(v, "item") else str(v)


def check_record(c: BoundCheck) -> dict:
    return {
        "bound_id": c.bound_id,
        "graph6": c.graph6,
        "applicable": c.applicable,
        "reason": c.reason,
        "sense": c.sense,
        "lhs": json_value(c.lhs),
        "rhs": json_value(c.rhs),
        "slack": json_value(c.slack),
        "holds": c.holds,
        "equality": c.equality,
        "exact": c.exact,
        "discrepancy": c.discrepancy,
        "extras": json_value(c.extras),
    }


def _check_one(args: tuple[Graph, list[str]]) -> list[BoundCheck]:
    return check_graph(*args)


def run_suite(graphs: Iterable[Graph], bound_ids: Sequence[str] | None = None, jobs: int = 1) -> SuiteResult:
    """Check every selected bound on every graph.

    Results keep input order whatever ``jobs`` is, so output is identical
    for any degree of parallelism.
    """
    ids = resolve_bounds(bound_ids)
    graphs = list(graphs)
    work = [(g, ids) for g in graphs]
    if jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_graph = list(pool.map(_check_one, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        per_graph = [_check_one(w) for w in work]
    return SuiteResult(ids, [c for batch in per_graph for c in batch], len(graphs))
