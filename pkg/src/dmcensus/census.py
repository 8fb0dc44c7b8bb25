"""Class census construction, the brute-force oracle, and catalog verification.

Two independent routes produce the census for (p, d):

* build_census enumerates every labeled d-regular matrix, groups the matrices
  by canonical form, and computes each class cardinality analytically as
  (p!/|Aut|) * weight(canonical).
* oracle_census enumerates every configuration word, projects each word onto
  its matrix, and tallies raw word counts per canonical form, with no
  counting formulas anywhere.

compare_census cross-checks the two, and verify_against_catalog checks a
census against the bundled reference catalog of class records.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .canonical import canonical_form
from .core import ArcMatrix, ClassId, total_configurations, weight
from .generate import enumerate_regular_matrices, enumerate_words, word_to_matrix
from .monomial import (
    DegreeError,
    Monomial,
    MonomialParseError,
    matrix_to_monomial,
    monomial_to_matrix,
    parse_monomial,
)


class CensusInvariantError(RuntimeError):
    """The computed census violates one of its own exact identities.

    This signals a bug in the library, never bad user input, so it is raised
    loudly instead of being folded into a report.
    """


@dataclass(frozen=True)
class CensusEntry:
    """One isomorphism class: canonical representative plus its exact counts."""

    class_id: ClassId
    canonical: ArcMatrix
    aut_order: int
    weight: int
    labeled_matrix_count: int
    representative: Monomial

    @property
    def p(self) -> int:
        return self.class_id.p

    @property
    def rank(self) -> int:
        return self.class_id.rank

    @property
    def cardinality(self) -> int:
        return self.class_id.cardinality


@dataclass(frozen=True)
class CensusReport:
    """Complete census for (p, d); entries ascend by canonical matrix."""

    p: int
    d: int
    entries: tuple[CensusEntry, ...]
    total: int

    def entry_for_canonical(self, matrix: ArcMatrix) -> CensusEntry | None:
        for entry in self.entries:
            if entry.canonical == matrix:
                return entry
        return None


def _finish_report(p, d, per_class, word_total=None) -> CensusReport:
    # per_class: canonical ArcMatrix -> (aut_order, labeled_count, weight, cardinality)
    entries = []
    total = 0
    for rank, canon in enumerate(sorted(per_class, key=lambda m: m.entries), start=1):
        aut_order, labeled, wt, cardinality = per_class[canon]
        entries.append(
            CensusEntry(
                ClassId(p, rank, cardinality),
                canon,
                aut_order,
                wt,
                labeled,
                matrix_to_monomial(canon),
            )
        )
        total += cardinality
    expected = total_configurations(p, d)
    if total != expected:
        raise CensusInvariantError(
            f"census for p={p}, d={d} totals {total}, expected {expected}"
        )
    if word_total is not None and word_total != expected:
        raise CensusInvariantError(
            f"word stream for p={p}, d={d} produced {word_total} words, expected {expected}"
        )
    return CensusReport(p, d, tuple(entries), total)


def build_census(p: int, d: int) -> CensusReport:
    """Census via canonical grouping and the orbit-stabilizer cardinality.

    Every labeled regular matrix is canonicalized; each class contributes
    p!/|Aut| labeled matrices (checked against the actual group size) and
    cardinality (p!/|Aut|) * weight.
    """
    seen: dict[ArcMatrix, int] = {}
    aut_orders: dict[ArcMatrix, int] = {}
    for matrix in enumerate_regular_matrices(p, d):
        result = canonical_form(matrix)
        seen[result.canonical] = seen.get(result.canonical, 0) + 1
        aut_orders[result.canonical] = result.aut_order
    fact_p = math.factorial(p)
    per_class = {}
    for canon, group_size in seen.items():
        aut_order = aut_orders[canon]
        if fact_p % aut_order:
            raise CensusInvariantError(
                f"|Aut| = {aut_order} does not divide {p}! for {canon}"
            )
        labeled = fact_p // aut_order
        if labeled != group_size:
            raise CensusInvariantError(
                f"class of {canon} has {group_size} labeled matrices, "
                f"orbit-stabilizer predicts {labeled}"
            )
        per_class[canon] = (aut_order, labeled, weight(canon, d), labeled * weight(canon, d))
    return _finish_report(p, d, per_class)


def oracle_census(p: int, d: int) -> CensusReport:
    """Census rebuilt by brute force: raw word tallies, no counting formulas."""
    matrix_tally: dict[ArcMatrix, int] = {}
    word_total = 0
    for word in enumerate_words(p, d):
        matrix = word_to_matrix(word, p, d)
        matrix_tally[matrix] = matrix_tally.get(matrix, 0) + 1
        word_total += 1
    class_words: dict[ArcMatrix, int] = {}
    class_matrices: dict[ArcMatrix, int] = {}
    aut_orders: dict[ArcMatrix, int] = {}
    for matrix, words in matrix_tally.items():
        result = canonical_form(matrix)
        canon = result.canonical
        class_words[canon] = class_words.get(canon, 0) + words
        class_matrices[canon] = class_matrices.get(canon, 0) + 1
        aut_orders[canon] = result.aut_order
    per_class = {}
    for canon, cardinality in class_words.items():
        labeled = class_matrices[canon]
        if cardinality % labeled:
            raise CensusInvariantError(
                f"class of {canon}: {cardinality} words over {labeled} matrices "
                "is not an integer per-matrix count"
            )
        per_class[canon] = (aut_orders[canon], labeled, cardinality // labeled, cardinality)
    return _finish_report(p, d, per_class, word_total=word_total)


@dataclass(frozen=True)
class CensusDiff:
    """Discrepancies between two censuses for the same (p, d)."""

    p: int
    d: int
    only_in_a: tuple[ArcMatrix, ...]
    only_in_b: tuple[ArcMatrix, ...]
    cardinality_mismatches: tuple[tuple[ArcMatrix, int, int], ...]

    def is_empty(self) -> bool:
        return not (self.only_in_a or self.only_in_b or self.cardinality_mismatches)

    def __bool__(self):
        return not self.is_empty()


def compare_census(a: CensusReport, b: CensusReport) -> CensusDiff:
    """Diff two censuses by canonical-form keys and cardinalities."""
    if (a.p, a.d) != (b.p, b.d):
        raise ValueError(
            f"cannot compare censuses for (p={a.p}, d={a.d}) and (p={b.p}, d={b.d})"
        )
    a_cards = {entry.canonical: entry.cardinality for entry in a.entries}
    b_cards = {entry.canonical: entry.cardinality for entry in b.entries}
    order = lambda m: m.entries
    only_a = tuple(sorted(a_cards.keys() - b_cards.keys(), key=order))
    only_b = tuple(sorted(b_cards.keys() - a_cards.keys(), key=order))
    mismatches = tuple(
        (canon, a_cards[canon], b_cards[canon])
        for canon in sorted(a_cards.keys() & b_cards.keys(), key=order)
        if a_cards[canon] != b_cards[canon]
    )
    return CensusDiff(a.p, a.d, only_a, only_b, mismatches)


@dataclass(frozen=True)
class CatalogRecord:
    """One reference-catalog row: designation triple plus monomial text."""

    p: int
    rank: int
    cardinality: int
    monomial: str
    note: str = ""

    @property
    def designation(self) -> str:
        return f"{self.p},{self.rank},{self.cardinality}"


@dataclass(frozen=True)
class Catalog:
    """Reference catalog of class records, keyed by node count."""

    records: tuple[CatalogRecord, ...]

    @classmethod
    def from_csv_text(cls, text: str) -> "Catalog":
        reader = csv.reader(text.splitlines())
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError("catalog CSV is empty") from None
        if header != ["p", "rank", "cardinality", "monomial", "note"]:
            raise ValueError(f"unexpected catalog CSV header: {header!r}")
        records = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 5:
                raise ValueError(f"catalog CSV line {lineno}: expected 5 fields, got {len(row)}")
            try:
                p, rank, cardinality = int(row[0]), int(row[1]), int(row[2])
            except ValueError:
                raise ValueError(f"catalog CSV line {lineno}: non-integer designation") from None
            records.append(CatalogRecord(p, rank, cardinality, row[3], row[4]))
        return cls(tuple(records))

    def for_p(self, p: int) -> tuple[CatalogRecord, ...]:
        return tuple(r for r in self.records if r.p == p)

    def node_counts(self) -> tuple[int, ...]:
        return tuple(sorted({r.p for r in self.records}))


def load_catalog(path: str | Path | None = None) -> Catalog:
    """Load a catalog CSV; with no path, the catalog bundled with the package."""
    if path is None:
        text = resources.files("dmcensus").joinpath("data/reference_catalog.csv").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return Catalog.from_csv_text(text)


@dataclass(frozen=True)
class MatchedRecord:
    record: CatalogRecord
    entry: CensusEntry


@dataclass(frozen=True)
class CorrectedRecord:
    record: CatalogRecord
    entry: CensusEntry
    inserted_arc: tuple[int, int]  # 1-based (source, target) completing the degrees


@dataclass(frozen=True)
class MismatchedRecord:
    record: CatalogRecord
    entry: CensusEntry
    reason: str


@dataclass(frozen=True)
class UnmatchedRecord:
    record: CatalogRecord
    reason: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a census against the catalog records for its p.

    Every catalog record lands in exactly one of matched, corrected,
    mismatched, or unmatched_catalog; computed classes no record claimed end
    up in unmatched_computed.
    """

    p: int
    d: int
    matched: tuple[MatchedRecord, ...]
    corrected: tuple[CorrectedRecord, ...]
    mismatched: tuple[MismatchedRecord, ...]
    unmatched_catalog: tuple[UnmatchedRecord, ...]
    unmatched_computed: tuple[CensusEntry, ...]

    def ok(self) -> bool:
        return not (self.mismatched or self.unmatched_catalog or self.unmatched_computed)


def _forced_completion(error: DegreeError) -> tuple[int, int] | None:
    """The unique missing arc when exactly one arc completes the degrees, else None."""
    rows, cols = error.row_deficit, error.col_deficit
    if (
        all(v >= 0 for v in rows)
        and all(v >= 0 for v in cols)
        and sum(rows) == 1
        and sum(cols) == 1
    ):
        return rows.index(1) + 1, cols.index(1) + 1
    return None


def verify_against_catalog(report: CensusReport, catalog: Catalog) -> VerificationReport:
    """Match every catalog record for report.p to a computed class.

    A record whose monomial violates the degree constraints is completed only
    when a single missing arc is forced by the deficits; anything more
    ambiguous is reported, never guessed.  Matching goes through canonical
    forms (isomorphism), never through monomial text.
    """
    by_canonical = {entry.canonical: entry for entry in report.entries}
    claimed: dict[int, str] = {}  # computed rank -> designation that claimed it
    matched, corrected, mismatched, unmatched = [], [], [], []
    for record in catalog.for_p(report.p):
        try:
            mono = parse_monomial(record.monomial)
        except MonomialParseError as exc:
            unmatched.append(UnmatchedRecord(record, f"unparseable monomial: {exc}"))
            continue
        inserted = None
        try:
            matrix = monomial_to_matrix(mono, report.p, report.d)
        except DegreeError as exc:
            inserted = _forced_completion(exc)
            if inserted is None:
                unmatched.append(
                    UnmatchedRecord(record, f"no single-arc completion: {exc}")
                )
                continue
            matrix = monomial_to_matrix(
                Monomial(mono.factors + (inserted,)), report.p, report.d
            )
        except ValueError as exc:
            unmatched.append(UnmatchedRecord(record, str(exc)))
            continue
        entry = by_canonical.get(canonical_form(matrix).canonical)
        if entry is None:
            unmatched.append(
                UnmatchedRecord(record, "no computed class with this canonical form")
            )
            continue
        if entry.rank in claimed:
            unmatched.append(
                UnmatchedRecord(
                    record,
                    f"computed class {report.p},{entry.rank} already matched by "
                    f"record {claimed[entry.rank]}",
                )
            )
            continue
        claimed[entry.rank] = record.designation
        if entry.cardinality != record.cardinality:
            mismatched.append(
                MismatchedRecord(
                    record,
                    entry,
                    f"catalog cardinality {record.cardinality} vs computed {entry.cardinality}",
                )
            )
        elif inserted is not None:
            corrected.append(CorrectedRecord(record, entry, inserted))
        else:
            matched.append(MatchedRecord(record, entry))
    unmatched_computed = tuple(e for e in report.entries if e.rank not in claimed)
    return VerificationReport(
        report.p,
        report.d,
        tuple(matched),
        tuple(corrected),
        tuple(mismatched),
        tuple(unmatched),
        unmatched_computed,
    )


def class_lookup(report: CensusReport, mono: Monomial) -> ClassId:
    """ClassId of the census class containing the multigraph a monomial encodes."""
    matrix = monomial_to_matrix(mono, report.p, report.d)
    entry = report.entry_for_canonical(canonical_form(matrix).canonical)
    if entry is None:
        raise CensusInvariantError(
            "complete census has no class for a valid monomial; this is a bug"
        )
    return entry.class_id
