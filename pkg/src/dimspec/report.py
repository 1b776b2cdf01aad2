"""Comparison reports and CSV/JSON serialization of scan records.

The CSV header is part of the wire contract and is emitted bit-exactly:

    D,n,m,beta,alpha_sign,alpha_lnmag,E0_sign,E0_lnmag,E0_decimal,classification,formula,paper_E0,ratio_log10

Signed-log values are split into their sign and lnmag columns (lossless,
floats written with shortest round-trip repr) plus a 3-significant-digit
decimal string for humans. JSON uses the same keys, with null for fields
that do not apply. Parsing reconstructs records generated by this library
exactly: reference values are re-attached from the embedded table and
invalid-outcome reasons are regenerated from the deterministic classifier.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DimspecError, InvalidParameterError
from .feasibility import bound_dims
from .model import (
    Classification,
    EnergyOutcome,
    Formula,
    ScanRecord,
    Scheme,
    SystemParams,
    classify_outcome,
)
from .refdata import TABLE1_E0, TABLE1_E0_SLR
from .signedlog import SignedLogReal
from .spectrum import EnergyQuery, e0_general, e0_scheme_mn
from .oracle import minimize_v_eff
from .potential import alpha_coefficient

_LN10 = math.log(10.0)

CSV_COLUMNS = [
    "D",
    "n",
    "m",
    "beta",
    "alpha_sign",
    "alpha_lnmag",
    "E0_sign",
    "E0_lnmag",
    "E0_decimal",
    "classification",
    "formula",
    "paper_E0",
    "ratio_log10",
]
CSV_HEADER = ",".join(CSV_COLUMNS)


# -- reference-table comparison ---------------------------------------------


@dataclass(frozen=True)
class Table1Row:
    """Computed-versus-published energy at one (D, n) of the m = n scheme."""

    D: int
    n: int
    paper_E0: SignedLogReal
    computed_E0: EnergyOutcome
    ratio: Optional[float]  # computed / published, when both are defined

    @property
    def ratio_log10(self) -> Optional[float]:
        if not self.computed_E0.is_bound:
            return None
        return (self.computed_E0.energy.lnmag - self.paper_E0.lnmag) / _LN10


def table1_compare() -> list[Table1Row]:
    """Evaluate the m = n closed form at every embedded reference point.

    The (3, 1) row is asserted to match the published value at its printed
    two-figure precision; every other row is reported, never asserted, since
    the published n > 1 values do not follow from the printed formulas.
    """
    rows: list[Table1Row] = []
    for (D, n) in sorted(TABLE1_E0_SLR, key=lambda k: (k[1], k[0])):
        paper = TABLE1_E0_SLR[(D, n)]
        computed = e0_scheme_mn(D, n)
        ratio = None
        if computed.is_bound:
            ln_ratio = computed.energy.lnmag - paper.lnmag
            ratio = math.exp(ln_ratio) if ln_ratio < 709.0 else math.inf
        rows.append(Table1Row(D, n, paper, computed, ratio))
    anchor = next(r for r in rows if (r.D, r.n) == (3, 1))
    if not anchor.computed_E0.is_bound:
        raise DimspecError("anchor row (3,1) failed to evaluate as bound")
    rel = abs(anchor.computed_E0.energy.to_float() - anchor.paper_E0.to_float()) / abs(
        anchor.paper_E0.to_float()
    )
    if rel > 2e-2:
        raise DimspecError(
            f"anchor row (3,1) deviates from the published value by {rel:.3e}"
        )
    return rows


# -- record serialization ----------------------------------------------------


def _record_fields(rec: ScanRecord) -> dict:
    alpha_sign = rec.alpha.sign if rec.alpha is not None else None
    alpha_lnmag = rec.alpha.lnmag if rec.alpha is not None else None
    energy = rec.outcome.energy
    ratio_log10 = None
    paper_float = None
    if rec.paper_value is not None:
        # prefer the defining table constant so the cell reads "-0.11", not
        # the value round-tripped through log space
        table_value = TABLE1_E0.get((rec.params.D, rec.params.n))
        if table_value is not None and SignedLogReal.from_float(table_value) == rec.paper_value:
            paper_float = table_value
        else:
            paper_float = rec.paper_value.to_float()
        if energy is not None:
            ratio_log10 = (energy.lnmag - rec.paper_value.lnmag) / _LN10
    return {
        "D": rec.params.D,
        "n": rec.params.n,
        "m": rec.params.m,
        "beta": rec.beta,
        "alpha_sign": alpha_sign,
        "alpha_lnmag": alpha_lnmag,
        "E0_sign": energy.sign if energy is not None else None,
        "E0_lnmag": energy.lnmag if energy is not None else None,
        "E0_decimal": energy.to_decimal() if energy is not None else None,
        "classification": rec.outcome.classification.value,
        "formula": rec.formula.value,
        "paper_E0": paper_float,
        "ratio_log10": ratio_log10,
    }


def _infer_scheme(n: int, m: int) -> Scheme:
    # (n=1, m=1) is genuinely ambiguous; the m = n reading wins there
    if m == n:
        return Scheme.M_EQUALS_N
    if m == 1:
        return Scheme.M_EQUALS_ONE
    return Scheme.EXPLICIT


def _record_from_fields(f: dict) -> ScanRecord:
    D, n, m, beta = f["D"], f["n"], f["m"], f["beta"]
    scheme = _infer_scheme(n, m)
    params = SystemParams(D, n, m, scheme)
    alpha = None
    if f["alpha_sign"] is not None:
        alpha = SignedLogReal(f["alpha_sign"], f["alpha_lnmag"])
    classification = Classification(f["classification"])
    if classification is Classification.BOUND:
        outcome = EnergyOutcome.bound(SignedLogReal(f["E0_sign"], f["E0_lnmag"]))
    elif classification is Classification.INVALID:
        rebuilt = classify_outcome(D, n, m)
        if rebuilt is None or rebuilt.classification is not Classification.INVALID:
            raise InvalidParameterError(
                "unparseable", f"record at D={D}, n={n}, m={m} does not classify invalid"
            )
        outcome = rebuilt
    else:
        outcome = EnergyOutcome(classification)
    paper = None
    if f["paper_E0"] is not None:
        paper = TABLE1_E0_SLR.get((D, n))
        if paper is None:
            paper = SignedLogReal.from_float(f["paper_E0"])
    return ScanRecord(
        params=params,
        beta=beta,
        alpha=alpha,
        outcome=outcome,
        formula=Formula(f["formula"]),
        paper_value=paper,
    )


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_records_csv(records: list[ScanRecord]) -> str:
    """Records to CSV, input order preserved."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        fields = _record_fields(rec)
        writer.writerow([_csv_cell(fields[col]) for col in CSV_COLUMNS])
    return buf.getvalue()


def parse_records_csv(text: str) -> list[ScanRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != CSV_COLUMNS:
        raise InvalidParameterError("bad-header", f"unexpected CSV header {header!r}")
    records = []
    for row in reader:
        if not row:
            continue
        raw = dict(zip(CSV_COLUMNS, row))
        fields = {
            "D": int(raw["D"]),
            "n": int(raw["n"]),
            "m": int(raw["m"]),
            "beta": int(raw["beta"]),
            "alpha_sign": int(raw["alpha_sign"]) if raw["alpha_sign"] else None,
            "alpha_lnmag": float(raw["alpha_lnmag"]) if raw["alpha_lnmag"] else None,
            "E0_sign": int(raw["E0_sign"]) if raw["E0_sign"] else None,
            "E0_lnmag": float(raw["E0_lnmag"]) if raw["E0_lnmag"] else None,
            "E0_decimal": raw["E0_decimal"] or None,
            "classification": raw["classification"],
            "formula": raw["formula"],
            "paper_E0": float(raw["paper_E0"]) if raw["paper_E0"] else None,
            "ratio_log10": float(raw["ratio_log10"]) if raw["ratio_log10"] else None,
        }
        records.append(_record_from_fields(fields))
    return records


def render_records_json(records: list[ScanRecord]) -> str:
    """Records to a JSON array of flat objects, input order preserved."""
    return json.dumps([_record_fields(rec) for rec in records], indent=2)


def parse_records_json(text: str) -> list[ScanRecord]:
    payload = json.loads(text)
    if not isinstance(payload, list):
        raise InvalidParameterError("bad-json", "expected a top-level JSON array")
    return [_record_from_fields(entry) for entry in payload]


def sort_records(records: list[ScanRecord]) -> list[ScanRecord]:
    """Canonical report order: ascending n, then ascending D."""
    return sorted(records, key=lambda r: (r.params.n, r.params.D, r.params.m))


# -- oracle equivalence sweep -------------------------------------------------


@dataclass(frozen=True)
class OraclePoint:
    D: int
    n: int
    scheme: Scheme
    lnmag_closed: float
    lnmag_oracle: float
    r_star_search: float
    r_star_stationarity: float

    @property
    def lnmag_deviation(self) -> float:
        return abs(self.lnmag_oracle - self.lnmag_closed) / max(
            1.0, abs(self.lnmag_closed)
        )

    @property
    def r_star_deviation(self) -> float:
        return abs(self.r_star_search - self.r_star_stationarity) / self.r_star_stationarity


@dataclass(frozen=True)
class OracleReport:
    points: list[OraclePoint]
    max_lnmag_deviation: float
    max_r_star_deviation: float


def oracle_equivalence_report(max_n: int = 5, max_D: int = 20) -> OracleReport:
    """Minimize the effective potential at every bound grid point and compare.

    Covers the m = n scheme for odd n and the m = 1 scheme for every n up to
    ``max_n``, dimensions capped at ``max_D``.
    """
    points: list[OraclePoint] = []
    combos = [(n, Scheme.M_EQUALS_N) for n in range(1, max_n + 1, 2)]
    combos += [(n, Scheme.M_EQUALS_ONE) for n in range(1, max_n + 1)]
    for n, scheme in combos:
        window = bound_dims(n, scheme)
        for D in window.members:
            if D > max_D:
                continue
            m = n if scheme is Scheme.M_EQUALS_N else 1
            spec = alpha_coefficient(D, m)
            query = EnergyQuery(spec.alpha, D - 2 * m, n, D)
            closed = e0_general(query)
            found = minimize_v_eff(query)
            # stationarity closed form: r*^(2n-beta) = 2n (D/2)^(2n) / (alpha beta)
            ln_r_stat = (
                math.log(2 * n)
                + 2 * n * (math.log(D) - math.log(2.0))
                - spec.alpha.lnmag
                - math.log(query.beta)
            ) / (2 * n - query.beta)
            points.append(
                OraclePoint(
                    D=D,
                    n=n,
                    scheme=scheme,
                    lnmag_closed=closed.energy.lnmag,
                    lnmag_oracle=found.e_min.lnmag,
                    r_star_search=found.r_star,
                    r_star_stationarity=math.exp(ln_r_stat),
                )
            )
    return OracleReport(
        points=points,
        max_lnmag_deviation=max(p.lnmag_deviation for p in points),
        max_r_star_deviation=max(p.r_star_deviation for p in points),
    )
