# cli/show_dims.py

import sys
from typing import Dict, List, TextIO

import pandas as pd

from config.run_config import RunConfig
from core.diagram import enumerate_diagrams
from core.dimension_checks import duality_dimensions, hecke_dimension, validate_q_points


def dimension_rows(n: int, l: int, q_points) -> List[Dict]:
    points = validate_q_points(q_points, minimum=1)
    diagrams = len(enumerate_diagrams(l))
    rows = []
    for q in points:
        algebra, commutant = duality_dimensions(l, n, q)
        rows.append({
            "n": n,
            "l": l,
            "q": str(q),
            "diagrams": diagrams,
            "algebra": algebra,
            "commutant": commutant,
            "hecke": hecke_dimension(l, n, q) if l < n else None,
        })
    return rows


def dimensions_table(config: RunConfig) -> pd.DataFrame:
    rows = [row for n in config.n_values for l in config.l_values
            for row in dimension_rows(n, l, config.q_points)]
    table = pd.DataFrame(rows, columns=["n", "l", "q", "diagrams", "algebra", "commutant", "hecke"])
    # hecke is only defined for l < n
    table["hecke"] = table["hecke"].astype("Int64")
    return table


def cmd_dims(config: RunConfig, stream: TextIO = sys.stdout) -> int:
    table = dimensions_table(config)
    text = table.to_json(orient="records", indent=2) if config.output_format == "structured" \
        else table.to_string(index=False)
    if config.out:
        with open(config.out, "w", newline="\n") as f:
            f.write(text + "\n")
    else:
        stream.write(text + "\n")
    return 0
