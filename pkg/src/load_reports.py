"""
Load the report datasets.
"""

import json
import sys

sys.path.insert(1, "./src/")

import chartbook
import pandas as pd
import polars as pl

BASE_DIR = chartbook.env.get_project_root()
DATA_DIR = BASE_DIR / "_data"

JSON_COLUMNS = ("inputs", "outputs", "expected")


def _load(path, format):
    if format == "pandas":
        return pd.read_parquet(path)
    if format == "polars":
        return pl.read_parquet(path)
    raise ValueError(f"Invalid format: {format}")


def load_reports(data_dir=DATA_DIR, format="pandas"):
    return _load(data_dir / "parageom_reports.parquet", format)


def load_h1_scan(data_dir=DATA_DIR, format="pandas"):
    return _load(data_dir / "parageom_h1_scan.parquet", format)


def expand_json(df):
    """Decode the JSON string columns of a pandas report table."""
    df = df.copy()
    for col in JSON_COLUMNS:
        df[col] = df[col].map(json.loads)
    return df


def mismatches(df):
    return df[~df["match"]]
