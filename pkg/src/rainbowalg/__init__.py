"""rainbowalg: coloured-graph algebras, amalgamation games, and equation transfer."""

from rainbowalg.palette import (
    Colour,
    RainbowParams,
    TripleRuleTable,
    default_table,
    classical_pair_table,
    paper_params,
)

__all__ = [
    "Colour",
    "RainbowParams",
    "TripleRuleTable",
    "default_table",
    "classical_pair_table",
    "paper_params",
]
