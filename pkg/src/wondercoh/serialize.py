"""Canonical serialisation of cohomology tables.

JSON output follows a fixed schema; dimensions are decimal strings so
consumers never have to parse big integers.  All orderings are inherited
from the canonical table order, so identical inputs serialise to
identical bytes.
"""

from __future__ import annotations

import json
from typing import Sequence

from .cohomology import CohomologyTable
from .varieties import WonderfulVariety


def table_to_dict(
    X: WonderfulVariety,
    table: CohomologyTable,
    lam_coords: Sequence[int],
    with_witnesses: bool = True,
) -> dict:
    groups = []
    for g in table.groups:
        constituents = []
        for c in g.constituents:
            entry = {
                "highest_weight": list(c.highest_weight),
                "multiplicity": c.multiplicity,
                "witnesses": [
                    {"J": list(t.J), "mu": list(t.mu), "length": t.length}
                    for t in c.witnesses
                ]
                if with_witnesses
                else [],
            }
            constituents.append(entry)
        groups.append(
            {
                "degree": g.degree,
                "dimension": str(g.dimension),
                "constituents": constituents,
            }
        )
    return {
        "variety": X.name,
        "lambda": [int(x) for x in lam_coords],
        "N": X.dimension_N,
        "groups": groups,
    }


def table_to_json(
    X: WonderfulVariety,
    table: CohomologyTable,
    lam_coords: Sequence[int],
    with_witnesses: bool = True,
) -> str:
    doc = table_to_dict(X, table, lam_coords, with_witnesses)
    return json.dumps(doc, indent=2, separators=(",", ": ")) + "\n"


def table_to_text(
    X: WonderfulVariety, table: CohomologyTable, lam_coords: Sequence[int]
) -> str:
    lines = [
        f"{X.name}, lambda = {list(lam_coords)} (pic coordinates), N = {X.dimension_N}"
    ]
    if not table.groups:
        lines.append("all cohomology groups vanish")
    for g in table.groups:
        lines.append(f"H^{g.degree}: dimension {g.dimension}")
        for c in g.constituents:
            mult = f" x{c.multiplicity}" if c.multiplicity > 1 else ""
            lines.append(
                f"  L({list(c.highest_weight)}){mult}  dim {c.dimension}"
            )
            for t in c.witnesses:
                lines.append(
                    f"    witness: J = {list(t.J)}, mu = {list(t.mu)}, l(mu) = {t.length}"
                )
    return "\n".join(lines) + "\n"


def table_to_csv(
    X: WonderfulVariety, table: CohomologyTable, lam_coords: Sequence[int]
) -> str:
    rows = ["degree,highest_weight,multiplicity,dimension"]
    for g in table.groups:
        for c in g.constituents:
            hw = " ".join(str(x) for x in c.highest_weight)
            rows.append(f"{g.degree},{hw},{c.multiplicity},{c.dimension}")
    return "\n".join(rows) + "\n"
