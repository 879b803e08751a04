"""JSON interchange formats for complexes, CW complexes and page reports."""

from .serialization import (
    FORMAT_VERSION,
    KINDS,
    PageReport,
    TermReport,
    dumps,
    file_kind,
    load_file,
    loads,
    parse_chain_complex,
    parse_cw_complex,
    parse_filtered_complex,
    parse_page_report,
    save_file,
    serialize_chain_complex,
    serialize_cw_complex,
    serialize_filtered_complex,
)

__all__ = [
    "FORMAT_VERSION", "KINDS", "PageReport", "TermReport", "dumps", "file_kind", "load_file",
    "loads", "parse_chain_complex", "parse_cw_complex", "parse_filtered_complex",
    "parse_page_report", "save_file", "serialize_chain_complex", "serialize_cw_complex",
    "serialize_filtered_complex",
]
