"""Balance identity and proposition checks over exact limit statistics.

Every check compares exact rationals; nothing here touches floating
point.  Failures come back as CheckResult rows, never exceptions, so a
verification report can list all of them at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .catalog import list_catalog, load_template
from .errors import MissingCatalogEntry
from .periodic import LimitStats, build_periodic_tiling, limit_stats
from .rational import format_rational

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    applicable: bool
    passed: bool
    lhs: str
    rhs: str
    note: str = ""


def _ok(check_id, passed, lhs, rhs, note=""):
    return CheckResult(
        check_id=check_id,
        applicable=True,
        passed=bool(passed),
        lhs=str(lhs),
        rhs=str(rhs),
        note=note,
    )


def _skip(check_id, note):
    return CheckResult(
        check_id=check_id, applicable=False, passed=True, lhs="", rhs="", note=note
    )


def _fmt(q: Fraction) -> str:
    return format_rational(q)


def check_core_identities(stats: LimitStats) -> list[CheckResult]:
    """The five base identities every strongly balanced tiling satisfies."""
    out = []
    out.append(_ok("EQ1", stats.v == stats.e - 1, _fmt(stats.v), _fmt(stats.e - 1),
                   "v = e - 1"))
    sum_t = sum(stats.t_h.values(), Fraction(0))
    sum_v = sum(stats.v_j.values(), Fraction(0))
    out.append(_ok(
        "EQ2",
        sum_t == 1 and sum_v == stats.v,
        f"sum t_h = {_fmt(sum_t)}; sum v_j = {_fmt(sum_v)}",
        f"1; v = {_fmt(stats.v)}",
        "normalization of t_h and v_j",
    ))
    sum_jv = sum((j * q for j, q in stats.v_j.items()), Fraction(0))
    sum_ht = stats.sum_h_t_h
    out.append(_ok(
        "EQ3",
        sum_jv == 2 * stats.e and sum_ht == 2 * stats.e,
        f"sum j*v_j = {_fmt(sum_jv)}; sum h*t_h = {_fmt(sum_ht)}",
        f"2e = {_fmt(2 * stats.e)}",
        "edge double counting",
    ))
    avg = stats.avg_valence
    if avg > 0 and sum_ht > 0:
        lhs = Fraction(1) / avg + Fraction(1) / sum_ht
        out.append(_ok("EQ4", lhs == HALF, _fmt(lhs), "1/2",
                       "1/(sum j*w_j) + 1/(sum h*t_h) = 1/2"))
    else:
        out.append(_ok("EQ4", False, "undefined", "1/2", "zero denominator"))
    out.append(_ok("EQ5", avg >= 3, _fmt(avg), ">= 3", "minimum valence three"))
    return out


def check_balance_identities(stats: LimitStats) -> list[CheckResult]:
    """Three weighted combinations that vanish for strongly balanced tilings.

    They are linearly dependent with the core identities; asserting all
    three independently gives redundancy that catches census bugs.
    """
    def sv(f):
        return sum((f(j) * q for j, q in stats.v_j.items()), Fraction(0))

    def st(f):
        return sum((f(h) * q for h, q in stats.t_h.items()), Fraction(0))

    combos = [
        ("BAL1", 2 * sv(lambda j: j - 3) + st(lambda h: h - 6),
         "2 sum (j-3)v_j + sum (h-6)t_h"),
        ("BAL2", sv(lambda j: j - 4) + st(lambda h: h - 4),
         "sum (j-4)v_j + sum (h-4)t_h"),
        ("BAL3", sv(lambda j: j - 6) + 2 * st(lambda h: h - 3),
         "sum (j-6)v_j + 2 sum (h-3)t_h"),
    ]
    return [_ok(cid, val == 0, _fmt(val), "0", note) for cid, val, note in combos]


def check_ngon_propositions(stats: LimitStats) -> list[CheckResult]:
    """Bounds that depend only on the common corner count n."""
    out = []
    sum_ht = stats.sum_h_t_h
    avg = stats.avg_valence
    out.append(_ok("PROP1", sum_ht <= 6, _fmt(sum_ht), "<= 6",
                   "mean adjacent count at most six"))
    if stats.n is None:
        out.append(_skip("PROP2", "no common corner count"))
        out.append(_skip("PROP3", "no common corner count"))
        return out
    upper = Fraction(2 * stats.n, stats.n - 2)
    out.append(_ok("PROP2", 3 <= avg <= upper, _fmt(avg),
                   f"in [3, {_fmt(upper)}]", f"valence bounds for n={stats.n}"))
    if stats.edge_to_edge:
        out.append(_ok("PROP3", avg == upper, _fmt(avg), _fmt(upper),
                       "edge-to-edge mean valence is extremal"))
    else:
        out.append(_skip("PROP3", "not edge-to-edge"))
    return out


def check_hexagon(stats: LimitStats) -> list[CheckResult]:
    """Checks specific to monohedral hexagon tilings."""
    if stats.n != 6:
        return [
            _skip("PROP4", "not a hexagon tiling"),
            _skip("COR1", "not a hexagon tiling"),
        ]
    avg = stats.avg_valence
    t6 = stats.t_h.get(6, Fraction(0))
    high = sum((q for h, q in stats.t_h.items() if h >= 7), Fraction(0))
    p4 = avg == 3 and t6 == 1 and high == 0
    out = [_ok(
        "PROP4", p4,
        f"sum j*w_j = {_fmt(avg)}; t_6 = {_fmt(t6)}; sum_h>=7 t_h = {_fmt(high)}",
        "3; 1; 0",
        "every hexagon has exactly six adjacents",
    )]
    only3 = all(q == 0 for j, q in stats.v_j.items() if j != 3)
    out.append(_ok(
        "COR1", stats.edge_to_edge and only3,
        f"edge_to_edge = {stats.edge_to_edge}; nonzero v_j = "
        + str(sorted(j for j, q in stats.v_j.items() if q != 0)),
        "true; [3]",
        "edge-to-edge with only 3-valent vertices",
    ))
    return out


def check_pentagon(stats: LimitStats) -> list[CheckResult]:
    """Checks specific to monohedral pentagon tilings."""
    ids = ["PROP5", "PROP6", "PROP7", "PROP8", "PROP9", "THM1", "THM2",
           "PROP10", "PROP11", "PROP12", "PROP13", "PROP14", "PROP15",
           "PROP16", "EQUIV"]
    if stats.n != 5:
        return [_skip(cid, "not a pentagon tiling") for cid in ids]
    out = []
    sum_ht = stats.sum_h_t_h
    avg = stats.avg_valence
    t5 = stats.t_h.get(5, Fraction(0))
    t6 = stats.t_h.get(6, Fraction(0))
    high_mass = sum((q for h, q in stats.t_h.items() if h >= 7), Fraction(0))
    high_excess = sum(
        ((h - 6) * q for h, q in stats.t_h.items() if h >= 7), Fraction(0)
    )

    out.append(_ok("PROP5", 5 <= sum_ht <= 6, _fmt(sum_ht), "in [5, 6]",
                   "mean adjacent count bounds"))
    out.append(_ok("PROP6", Fraction(5, 2) <= stats.e <= 3, _fmt(stats.e),
                   "in [5/2, 3]", "edge density bounds"))
    out.append(_ok("PROP7", THREE_HALVES <= stats.v <= 2, _fmt(stats.v),
                   "in [3/2, 2]", "vertex density bounds"))
    out.append(_ok("PROP8", 3 <= avg <= Fraction(10, 3), _fmt(avg),
                   "in [3, 10/3]", "mean valence bounds"))
    out.append(_ok(
        "PROP9", 0 <= high_excess <= t5 <= 1,
        f"sum_h>=7 (h-6)t_h = {_fmt(high_excess)}; t_5 = {_fmt(t5)}",
        "0 <= excess <= t_5 <= 1",
        "excess adjacency is paid for by 5-adjacent tiles",
    ))
    out.append(_ok("THM1", t5 + t6 > 0, _fmt(t5 + t6), "> 0",
                   "some pentagon has five or six adjacents"))
    if high_mass > 0:
        out.append(_ok("THM2", t5 > 0, _fmt(t5), "> 0",
                       "tiles with many adjacents force 5-adjacent tiles"))
    else:
        out.append(_ok("THM2", True, _fmt(t5), "(vacuous)",
                       "no tile has seven or more adjacents"))
    if stats.edge_to_edge:
        p10 = (t5 == 1 and stats.v == THREE_HALVES
               and stats.e == Fraction(5, 2) and avg == Fraction(10, 3))
        out.append(_ok(
            "PROP10", p10,
            f"t_5 = {_fmt(t5)}; v = {_fmt(stats.v)}; e = {_fmt(stats.e)}; "
            f"sum j*w_j = {_fmt(avg)}",
            "1; 3/2; 5/2; 10/3",
            "edge-to-edge pentagon profile",
        ))
    else:
        out.append(_skip("PROP10", "not edge-to-edge"))

    v3 = stats.v_j.get(3, Fraction(0))
    hi_v = [(j, q) for j, q in stats.v_j.items() if j >= 4]
    rhs11 = 2 + sum(((2 - j) * q for j, q in hi_v), Fraction(0))
    out.append(_ok("PROP11", v3 == rhs11, _fmt(v3), _fmt(rhs11),
                   "v_3 = 2 + sum_j>=4 (2-j)v_j"))
    if stats.edge_to_edge:
        rhs12 = sum(((3 * j - 10) * q for j, q in hi_v), Fraction(0))
        out.append(_ok("PROP12", v3 == rhs12, _fmt(v3), _fmt(rhs12),
                       "v_3 = sum_j>=4 (3j-10)v_j"))
    else:
        out.append(_skip("PROP12", "not edge-to-edge"))

    def st(f):
        return sum((f(h) * q for h, q in stats.t_h.items()), Fraction(0))

    rhs13 = HALF * st(lambda h: h - 2)
    out.append(_ok("PROP13", stats.v == rhs13, _fmt(stats.v), _fmt(rhs13),
                   "v = (1/2) sum (h-2)t_h"))
    rhs14 = HALF + HALF * st(lambda h: h - 3)
    out.append(_ok("PROP14", stats.v == rhs14, _fmt(stats.v), _fmt(rhs14),
                   "v = 1/2 + (1/2) sum (h-3)t_h"))
    rhs15 = 2 + HALF * st(lambda h: h - 6)
    out.append(_ok("PROP15", stats.v == rhs15, _fmt(stats.v), _fmt(rhs15),
                   "v = 2 + (1/2) sum (h-6)t_h"))
    rhs16 = 2 - sum(((j - 3) * q for j, q in hi_v), Fraction(0))
    out.append(_ok("PROP16", stats.v == rhs16, _fmt(stats.v), _fmt(rhs16),
                   "v = 2 - sum_j>=4 (j-3)v_j"))
    out.append(_ok(
        "EQUIV", (stats.v == THREE_HALVES) == stats.edge_to_edge,
        f"v = {_fmt(stats.v)}",
        f"edge_to_edge = {stats.edge_to_edge}",
        "v = 3/2 exactly when the tiling is edge-to-edge",
    ))
    return out


def run_all_checks(stats: LimitStats) -> list[CheckResult]:
    """Every check in a fixed, report-friendly order."""
    return (
        check_core_identities(stats)
        + check_balance_identities(stats)
        + check_ngon_propositions(stats)
        + check_hexagon(stats)
        + check_pentagon(stats)
    )


# ---------------------------------------------------------------------------
# pentagon reference table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Table1Row:
    labels: tuple[str, ...]
    t_h: dict[int, Fraction]
    v_j: dict[int, Fraction]
    two_e: Fraction
    w_j: dict[int, Fraction]
    avg_valence: Fraction


def _row(labels, t_h, v_j):
    th = {h: Fraction(*q) if isinstance(q, tuple) else Fraction(q)
          for h, q in t_h.items()}
    vj = {j: Fraction(*q) if isinstance(q, tuple) else Fraction(q)
          for j, q in v_j.items()}
    v = sum(vj.values(), Fraction(0))
    wj = {j: q / v for j, q in vj.items()}
    return Table1Row(
        labels=tuple(labels),
        t_h=th,
        v_j=vj,
        two_e=sum((h * q for h, q in th.items()), Fraction(0)),
        w_j=wj,
        avg_valence=sum((j * w for j, w in wj.items()), Fraction(0)),
    )


TABLE1: tuple[Table1Row, ...] = (
    _row(["1", "2", "3", "12"], {6: 1}, {3: 2}),
    _row(["1e", "2e", "4", "6", "7", "8", "9"], {5: 1}, {3: 1, 4: (1, 2)}),
    _row(["5"], {5: 1}, {3: (4, 3), 6: (1, 6)}),
    _row(["10"], {5: (2, 3), 7: (1, 3)}, {3: (5, 3), 4: (1, 6)}),
    _row(["11"], {5: (1, 2), 7: (1, 2)}, {3: 2}),
    _row(["13"], {5: (1, 2), 6: (1, 2)}, {3: (3, 2), 4: (1, 4)}),
    _row(["14"], {5: (1, 3), 6: (1, 3), 7: (1, 3)}, {3: 2}),
    _row(["15"], {5: (2, 3), 6: (1, 3)}, {3: (4, 3), 4: (1, 3)}),
)

REQUIRED_LABELS = (
    "1", "1e", "2", "2e", "3", "4", "5", "10", "11", "12", "13", "14", "15",
)


def table1_row_for(label: str) -> Table1Row | None:
    for row in TABLE1:
        if label in row.labels:
            return row
    return None


def table1_compare() -> list[tuple[str, CheckResult]]:
    """Diff every pentagon catalog entry against its reference table row."""
    entries = {}
    for name, label, _e2e, _count in list_catalog():
        if table1_row_for(label) is not None:
            entries.setdefault(label, name)
    missing = [lab for lab in REQUIRED_LABELS if lab not in entries]
    if missing:
        raise MissingCatalogEntry(
            "catalog lacks required pentagon labels: " + ", ".join(missing)
        )

    out = []
    for label in sorted(entries, key=lambda s: (len(s), s)):
        name = entries[label]
        row = table1_row_for(label)
        stats = limit_stats(build_periodic_tiling(load_template(name)))
        diffs = []
        if stats.t_h != row.t_h:
            diffs.append("t_h")
        if stats.v_j != row.v_j:
            diffs.append("v_j")
        if 2 * stats.e != row.two_e:
            diffs.append("2e")
        if stats.w_j != row.w_j:
            diffs.append("w_j")
        if stats.avg_valence != row.avg_valence:
            diffs.append("avg_valence")
        out.append((label, _ok(
            "TABLE1", not diffs,
            f"{name}: t_h={{{', '.join(f'{h}: {_fmt(q)}' for h, q in sorted(stats.t_h.items()))}}}",
            f"row {'/'.join(row.labels)}",
            "fields differ: " + ", ".join(diffs) if diffs else "exact match",
        )))
    return out
