"""
Type frequencies, range counts and the radicand catalog behind `table`
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence

import pandas as pd

from modules.dpf import TYPE_TABLE, admissible_types
from modules.invariants import compute_invariants
from modules.radicand import enumerate_normalized

from .models import FieldRecord

logger = logging.getLogger(__name__)

# D_max columns the embedded rows fully determine; 151 stands for D <= 150
FREQUENCY_COLUMNS = (50, 100, 151)

RANGES = {
    "(0, 50)": (2, 50),
    "(50, 100)": (50, 100),
    "(100, 150]": (100, 151),
}

CATALOG_COLUMNS = [
    "D", "species", "f4", "m", "T", "t", "u", "v", "n", "s2", "s4",
    "admissible", "VL", "VM", "VN", "E", "type"
]


def type_frequencies(records: Iterable[FieldRecord], D_max: int) -> Dict[str, int]:
    """Count of each DPF type among records with D < D_max, every type listed"""
    names = [record.dpf_type.name for record in records if record.D < D_max]
    counts = pd.Series(names, dtype=object).value_counts()
    return {t.name: int(counts.get(t.name, 0)) for t in TYPE_TABLE}


def frequency_table(records: Sequence[FieldRecord],
                    columns: Sequence[int] = FREQUENCY_COLUMNS,
                    unicode: bool = False) -> pd.DataFrame:
    """Types as rows, one column per D_max, with a closing total row"""
    data = {}
    for D_max in columns:
        label = f"<={D_max - 1}" if D_max == 151 else f"<{D_max}"
        data[label] = type_frequencies(records, D_max)
    frame = pd.DataFrame(data)
    frame.index = [t.label(unicode) for t in TYPE_TABLE]
    frame.loc["total"] = frame.sum()
    return frame


def range_counts(limit: int = 1000) -> Dict[str, int]:
    """Normalized radicands in the three table ranges and in [2, limit)"""
    values = [D.value for D in enumerate_normalized(limit)]
    counts = {
        label: sum(1 for value in values if low <= value < high)
        for label, (low, high) in RANGES.items()
    }
    counts[f"[2, {limit})"] = len(values)
    return counts


def catalog(limit: int, records: Optional[Iterable[FieldRecord]] = None,
            start: int = 2, unicode: bool = False, workers: int = 1) -> pd.DataFrame:
    """One row per normalized radicand in [start, limit), ascending

    Class number and type columns come from the records when D is present
    there and are left blank otherwise.
    """
    known = {record.D: record for record in (records or [])}
    rows: List[Dict[str, object]] = []
    for radicand in enumerate_normalized(limit, 5, workers):
        if radicand.value < start:
            continue
        inv = compute_invariants(radicand)
        record = known.get(radicand.value)
        row = {
            "D": radicand.value,
            "species": inv.species.tag,
            "f4": inv.f4.format(unicode),
            "m": inv.m,
            **inv.counters_dict(),
            "admissible": " ".join(t.label(unicode) for t in admissible_types(inv).admissible),
            "VL": "", "VM": "", "VN": "", "E": "", "type": ""
        }
        if record is not None:
            row.update({
                "VL": record.V_L, "VM": record.V_M, "VN": record.V_N,
                "E": record.E, "type": record.dpf_type.label(unicode)
            })
        rows.append(row)
    logger.info(f"Catalog of {len(rows)} normalized radicands in [{start}, {limit})")
    return pd.DataFrame(rows, columns=CATALOG_COLUMNS)
