# bench_cli/db.py
"""Optional local sqlite store for benchmark rows."""
import logging
import sqlite3
from typing import Dict, List

from common.db_base import transaction

from .runner import BenchReport

logger = logging.getLogger(__name__)


class BenchDatabaseError(Exception):
    """Custom exception for results store operations"""
    pass


_CREATE = """
    CREATE TABLE IF NOT EXISTS bench_rows (
        id INTEGER PRIMARY KEY,
        algorithm TEXT NOT NULL,
        n INTEGER NOT NULL,
        k INTEGER,
        seed TEXT NOT NULL,
        repeat TEXT NOT NULL,
        elapsed_ms REAL NOT NULL,
        relinks INTEGER NOT NULL,
        merge_visits INTEGER NOT NULL,
        comparisons INTEGER NOT NULL,
        depth INTEGER NOT NULL,
        verified INTEGER NOT NULL,
        created_at DATETIME DEFAULT CURRENT_TIMESTAMP
    )
"""

_INSERT = """
    INSERT INTO bench_rows
        (algorithm, n, k, seed, repeat, elapsed_ms, relinks, merge_visits,
         comparisons, depth, verified)
    VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
"""


def init_database(db_path: str) -> None:
    """Create the results table if needed; existing rows are kept."""
    try:
        with transaction(db_path) as conn:
            conn.execute(_CREATE)
        logger.info("results store ready at %s", db_path)
    except (sqlite3.Error, RuntimeError) as e:
        logger.error("results store initialization failed: %s", e)
        raise BenchDatabaseError(f"Failed to initialize results store: {e}")


def save_report(db_path: str, report: BenchReport) -> int:
    """
    Append every row of ``report``.

    :return: number of rows written
    :raises BenchDatabaseError: on any sqlite failure (nothing is written)
    """
    init_database(db_path)
    values = []
    for row in report.rows:
        values.append((
            row.algorithm, row.n, row.k,
            # seeds are unsigned 64-bit and overflow sqlite INTEGER
            str(row.seed), str(row.repeat),
            row.elapsed_ms, row.counters.relink_count, row.counters.merge_visit_count,
            row.counters.comparison_count, row.counters.recursion_depth_max, int(row.verified),
        ))
    try:
        with transaction(db_path) as conn:
            conn.executemany(_INSERT, values)
    except (sqlite3.Error, RuntimeError) as e:
        logger.error("saving %d rows failed: %s", len(values), e)
        raise BenchDatabaseError(f"Failed to save report: {e}")
    logger.info("saved %d rows to %s", len(values), db_path)
    return len(values)


def load_rows(db_path: str) -> List[Dict[str, object]]:
    """Stored rows in insertion order, as dicts keyed by column name."""
    try:
        with transaction(db_path) as conn:
            conn.row_factory = sqlite3.Row
            cursor = conn.execute("SELECT * FROM bench_rows ORDER BY id")
            return [dict(record) for record in cursor.fetchall()]
    except (sqlite3.Error, RuntimeError) as e:
        logger.error("loading rows failed: %s", e)
        raise BenchDatabaseError(f"Failed to load rows: {e}")
