# common/db_base.py
import sqlite3
from contextlib import contextmanager
from typing import Iterator, Optional


def get_connection(db_path: str) -> sqlite3.Connection:
    """
    Open a SQLite connection to the benchmark results store.

    :param db_path: Path to the SQLite database file (":memory:" allowed)
    :return: sqlite3.Connection object
    :raises RuntimeError: if the file cannot be opened
    """
    try:
        conn = sqlite3.connect(db_path)
        conn.execute("PRAGMA foreign_keys = ON;")
        return conn
    except sqlite3.Error as e:
        raise RuntimeError(f"Database connection failed for {db_path!r}: {e}")


def close_connection(conn: Optional[sqlite3.Connection]) -> None:
    if conn:
        conn.close()


@contextmanager
def transaction(db_path: str) -> Iterator[sqlite3.Connection]:
    """
    Connection that commits on success, rolls back on error and always closes.

    Usage:
        with transaction(path) as conn:
            conn.execute(...)
    """
    conn = get_connection(db_path)
    try:
        yield conn
        conn.commit()
    except Exception:
        conn.rollback()
        raise
    finally:
        close_connection(conn)
