from formats.fmap import dump_fmap_table, parse_fmap_table, read_fmap_table
from formats.grounded import dump_grounded, parse_grounded, read_grounded
from formats.hypermatrix import dump_hypermatrix, parse_hypermatrix, read_hypermatrix
from formats.lines import read_text
from formats.poset import dump_poset, parse_poset, read_poset

__all__ = [
    "dump_fmap_table",
    "dump_grounded",
    "dump_hypermatrix",
    "dump_poset",
    "parse_fmap_table",
    "parse_grounded",
    "parse_hypermatrix",
    "parse_poset",
    "read_fmap_table",
    "read_grounded",
    "read_hypermatrix",
    "read_poset",
    "read_text",
]
