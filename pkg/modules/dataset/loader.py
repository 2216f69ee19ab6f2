"""
TSV ingestion and export of the field tables
"""

import csv
import io
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

import pandas as pd

from modules.arith import parse_factorization
from modules.dpf import parse_pattern, type_by_name
from modules.exceptions import DatasetFormatError, QuinticFieldError
from modules.invariants import SPECIES_BY_TAG
from modules.radicand import Radicand, is_normalized

from .models import COLUMNS, FieldRecord

logger = logging.getLogger(__name__)

EMBEDDED_DATASET = Path(__file__).parent / "data" / "metacyclic_fields_150.tsv"

_HEADER_COMMENT = (
    "# Pure metacyclic fields N = Q(zeta_5, D^(1/5)) with normalized radicands 2 <= D <= 150\n"
    "# pattern symbols: - absent, x available, (x) partially used, ox completely used\n"
)


def _data_lines(text: str) -> Tuple[List[int], List[str]]:
    """Header and data rows with their physical line numbers; comments and blanks dropped"""
    numbers, lines = [], []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            numbers.append(line_no)
            lines.append(line)
    return numbers, lines


def _cell(row: Dict[str, Any], column: str, line_no: int) -> str:
    value = row.get(column)
    if not isinstance(value, str):
        raise DatasetFormatError(f"missing value in column {column}", line_no)
    return value.strip()


def _integer(row: Dict[str, Any], column: str, line_no: int, minimum: int = 0) -> int:
    raw = _cell(row, column, line_no)
    try:
        value = int(raw)
    except ValueError:
        raise DatasetFormatError(f"column {column} is not an integer: '{raw}'", line_no)
    if value < minimum:
        raise DatasetFormatError(f"column {column} must be at least {minimum}, got {value}", line_no)
    return value


def _record(row: Dict[str, Any], line_no: int) -> FieldRecord:
    D = _integer(row, "D", line_no, minimum=2)
    try:
        radicand = Radicand.from_int(D)
    except QuinticFieldError as e:
        raise DatasetFormatError(str(e), line_no)
    if radicand.value != D or not is_normalized(radicand):
        raise DatasetFormatError(f"radicand {D} is not normalized", line_no)

    tag = _cell(row, "species", line_no)
    if tag not in SPECIES_BY_TAG:
        raise DatasetFormatError(f"unknown species '{tag}'", line_no)

    proto = _cell(row, "proto", line_no)
    if proto not in ("0", "1"):
        raise DatasetFormatError(f"proto must be 0 or 1, got '{proto}'", line_no)

    try:
        f4 = parse_factorization(_cell(row, "f4", line_no))
        pattern = parse_pattern(_cell(row, "pattern", line_no))
        dpf_type = type_by_name(_cell(row, "type", line_no))
    except QuinticFieldError as e:
        raise DatasetFormatError(str(e), line_no)

    E = _integer(row, "E", line_no)
    if E > 6:
        raise DatasetFormatError(f"E must lie in 0..6, got {E}", line_no)

    return FieldRecord(
        row_no=_integer(row, "no", line_no, minimum=1),
        D=D,
        species=SPECIES_BY_TAG[tag],
        f4=f4,
        m=_integer(row, "m", line_no, minimum=1),
        V_L=_integer(row, "VL", line_no),
        V_M=_integer(row, "VM", line_no),
        V_N=_integer(row, "VN", line_no),
        E=E,
        pattern=pattern,
        dpf_type=dpf_type,
        principal_factors=_cell(row, "pf", line_no),
        prototype_flag=proto == "1"
    )


def parse_dataset(text: str, origin: str = "<string>") -> List[FieldRecord]:
    """Parse dataset text: tab-separated, header row first, '#' comment lines allowed"""
    line_numbers, lines = _data_lines(text)
    if not lines:
        raise DatasetFormatError(f"{origin} contains no header row")

    try:
        frame = pd.read_csv(
            io.StringIO("\n".join(lines) + "\n"), sep="\t", dtype=str,
            keep_default_na=False, quoting=csv.QUOTE_NONE
        )
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise DatasetFormatError(f"{origin}: {e}")

    header = [str(column).strip() for column in frame.columns]
    if header != COLUMNS:
        raise DatasetFormatError(f"expected columns {COLUMNS}, found {header}", line_numbers[0])
    frame.columns = header

    records = []
    seen_D, seen_rows = set(), set()
    for index, row in enumerate(frame.to_dict(orient="records")):
        line_no = line_numbers[index + 1]
        record = _record(row, line_no)
        if record.row_no in seen_rows:
            raise DatasetFormatError(f"duplicate row number {record.row_no}", line_no)
        if record.D in seen_D:
            raise DatasetFormatError(f"duplicate radicand {record.D}", line_no)
        seen_rows.add(record.row_no)
        seen_D.add(record.D)
        records.append(record)

    logger.info(f"Loaded {len(records)} field records from {origin}")
    return records


def load_dataset(source: Optional[Union[str, Path]] = None) -> List[FieldRecord]:
    """Load records from a TSV file, or the embedded tables when source is None"""
    path = Path(source) if source is not None else EMBEDDED_DATASET
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DatasetFormatError(f"cannot read dataset {path}: {e}")
    return parse_dataset(text, origin=str(path))


def export_dataset(records: Iterable[FieldRecord], path: Optional[Union[str, Path]] = None) -> str:
    """Render records as dataset TSV; written to path when given"""
    frame = pd.DataFrame([record.to_row() for record in records], columns=COLUMNS)
    body = frame.to_csv(sep="\t", index=False, lineterminator="\n", quoting=csv.QUOTE_NONE)
    text = _HEADER_COMMENT + body
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
        logger.info(f"Exported {len(frame)} field records to {path}")
    return text
