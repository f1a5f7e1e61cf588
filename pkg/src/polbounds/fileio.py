"""Mueller-matrix input files and delimited table output."""
import csv
import json
import math

import numpy as np


class MatrixFileError(ValueError):
    pass


def parse_matrix(text):
    """Parse a 4x4 matrix from CSV lines or a JSON ``{"mueller": [...]}`` object.

    Blank lines and lines starting with '#' are ignored in the CSV form.
    Decimal separator is always '.', regardless of locale.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
            rows = doc["mueller"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise MatrixFileError(f"bad JSON matrix document: {exc}") from None
    else:
        rows = [
            line.split(",")
            for line in stripped.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]
    if len(rows) != 4 or any(not isinstance(r, list) or len(r) != 4 for r in rows):
        raise MatrixFileError("matrix must have 4 rows of 4 numbers")
    try:
        m = np.array([[_number(x) for x in row] for row in rows], dtype=float)
    except (TypeError, ValueError) as exc:
        raise MatrixFileError(f"bad matrix entry: {exc}") from None
    if not np.all(np.isfinite(m)):
        raise MatrixFileError("matrix entries must be finite")
    return m


def _number(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(x, (int, float)):
        return float(x)
    return float(str(x).strip())


def read_matrix_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_matrix(fh.read())
    except OSError as exc:
        raise MatrixFileError(f"cannot read {path}: {exc.strerror}") from None


def fmt(x):
    """Table cell text: floats with 12 significant digits."""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".12g")
    return str(x)


def _json_value(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (float, np.floating)):
        x = float(format(float(x), ".12g"))
        return None if math.isnan(x) else x
    if isinstance(x, np.integer):
        return int(x)
    return x


def write_table(out, header, rows, format="csv"):
    """Write rows as CSV (one header line) or as a JSON list of objects."""
    if format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(x) for x in row])
    elif format == "json":
        docs = [{k: _json_value(v) for k, v in zip(header, row)} for row in rows]
        json.dump(docs, out, indent=1)
        out.write("\n")
    else:
        raise ValueError(f"unknown format {format!r}")


def read_table(text):
    """Parse CSV emitted by write_table into (header, rows of strings)."""
    reader = csv.reader(text.splitlines())
    header = next(reader)
    return header, [row for row in reader]
