import threading
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple
import logging

from .ahss import BUILTIN_COEFFICIENTS, BUILTIN_CW, CWComplex, builtin_coefficients, builtin_cw, maunder_compare
from .ahss import skeletal_filtration, whitehead_filtration_coeff
from .cache import CacheManager
from .campaign import CampaignResult, run_campaign
from .complexes import ChainComplex
from .config import Config
from .decalage import decalage_iterate
from .filtered import FilteredComplex
from .formats import (
    PageReport,
    file_kind,
    load_file,
    parse_chain_complex,
    parse_cw_complex,
    parse_filtered_complex,
    parse_page_report,
    serialize_filtered_complex,
)
from .indexing import Convention
from .multiplicative import FilteredDGA
from .output.formatter import OutputFormatter
from .pages import einfty_page, er_page

logger = logging.getLogger(__name__)


class SpectralSequenceService:
    """Reusable application service behind the command line."""

    def __init__(
        self,
        config: Optional[Config] = None,
        cache_dir: Optional[str] = None,
    ):
        self.config = config or Config()
        self._cache_dir = cache_dir
        self._cache: Optional[CacheManager] = None
        self._lock = threading.Lock()

    @property
    def cache(self) -> CacheManager:
        """Construct the cache lazily so tests and CLI startup stay cheap."""
        if self._cache is None:
            self._cache = CacheManager(self.config, self._cache_dir)
        return self._cache

    def build_output_path(self, input_path: str, output_format: Optional[str] = None) -> str:
        formatter = OutputFormatter(self.config)
        formatter.format = output_format or self.config.output_format
        stem = Path(input_path).name.split(".")[0]
        return formatter.default_path(stem)

    def validate_file(self, input_path: str) -> Dict[str, Any]:
        """
        Parse and validate any interchange file.

        Raises:
            SchemaError: On malformed input
            InvalidComplexError: If d∘d ≠ 0
            InvalidFiltrationError: If a filtered complex or its algebra fails validation
        """
        data = load_file(input_path)
        kind = file_kind(data)
        summary: Dict[str, Any] = {"path": input_path, "kind": kind}
        if kind == "filtered_complex":
            F, dga = parse_filtered_complex(data)
            summary.update(degrees=list(F.degrees()), breakpoints=list(F.breakpoints), dga=dga is not None)
        elif kind == "chain_complex":
            C = parse_chain_complex(data)
            summary.update(degrees=list(C.degrees()))
        elif kind == "cw_complex":
            X = parse_cw_complex(data)
            summary.update(dimension=X.dimension)
        else:
            report = parse_page_report(data)
            summary.update(label=report.label, terms=len(report.terms))
        logger.info(f"{input_path}: valid {kind}")
        return summary

    def load_filtered(self, input_path: str) -> Tuple[Dict[str, Any], FilteredComplex, Optional[FilteredDGA]]:
        data = load_file(input_path)
        F, dga = parse_filtered_complex(data)
        return data, F, dga

    def compute_pages(
        self,
        F: FilteredComplex,
        r_max: Optional[int] = None,
        method: str = "classical",
        convention: Optional[Convention] = None,
        include_infinity: bool = True,
        source: Optional[Dict[str, Any]] = None,
    ) -> List[PageReport]:
        """
        Pages E^1 .. E^{r_max} (and E^∞) as reports in a convention's labels.

        Args:
            F: Filtered complex
            r_max: Last page (default: RMAX)
            method: ``classical`` or ``lurie``
            convention: Labels of the reports (default: CONVENTION)
            include_infinity: Append the E^∞ page
            source: Decoded input file; used as the cache key when given
        """
        r_max = r_max or self.config.rmax
        convention = convention or self.config.convention
        source = source or serialize_filtered_complex(F)
        start_time = time.time()

        reports = []
        for r in list(range(1, r_max + 1)) + (["inf"] if include_infinity else []):
            key = self.cache.generate_cache_key(source, method, r, convention.name)
            cached = self.cache.get_cached_page(key)
            if cached is not None:
                reports.append(parse_page_report(cached))
                continue
            with self._lock:
                page = einfty_page(F) if r == "inf" else er_page(F, r, method)
                report = PageReport.from_page(page, convention)
            self.cache.cache_page(key, report.to_dict())
            reports.append(report)

        logger.info(f"Computed {len(reports)} pages in {time.time() - start_time:.2f}s")
        return reports

    def pages_file(
        self,
        input_path: str,
        output_path: Optional[str] = None,
        output_format: Optional[str] = None,
        **page_options,
    ) -> Dict[str, Any]:
        start_time = time.time()
        data, F, _ = self.load_filtered(input_path)
        reports = self.compute_pages(F, source=data, **page_options)

        formatter = OutputFormatter(self.config)
        formatter.format = output_format or self.config.output_format
        preview_text = formatter.format_reports(reports)
        if output_path:
            formatter.save_report(reports, output_path)

        return {
            "reports": reports,
            "preview_text": preview_text,
            "output_format": formatter.format,
            "output_file": output_path,
            "processing_time": time.time() - start_time,
        }

    def decalage(self, F: FilteredComplex, iterate: int = 1) -> FilteredComplex:
        """Dec^{(k)} F, validated."""
        dec = decalage_iterate(F, iterate)
        violations = dec.validate()
        if violations:
            logger.warning(f"Dec^({iterate}) failed validation: {violations[0]}")
        return dec

    @staticmethod
    def resolve_cw(name_or_path: str) -> CWComplex:
        if name_or_path in BUILTIN_CW:
            return builtin_cw(name_or_path)
        return parse_cw_complex(load_file(name_or_path))

    def resolve_coefficients(self, name_or_path: str) -> ChainComplex:
        if name_or_path in BUILTIN_COEFFICIENTS:
            return builtin_coefficients(name_or_path, self.config.ring)
        return parse_chain_complex(load_file(name_or_path))

    def ahss(self, cw: str, coeff: str, r_max: Optional[int] = None) -> Dict[str, Any]:
        """
        Skeletal and Whitehead spectral sequences of Hom(C_*(X), M).

        Returns:
            Dict with the comparison report and the pages of both filtrations
        """
        X = self.resolve_cw(cw)
        M = self.resolve_coefficients(coeff)
        r_max = r_max or max(self.config.rmax, 2)
        report = maunder_compare(X, M, r_max)
        return {
            "report": report,
            "skeletal": self.compute_pages(skeletal_filtration(X, M), r_max),
            "whitehead": self.compute_pages(whitehead_filtration_coeff(X, M), r_max),
        }

    def verify(self, theorem: str, **options) -> CampaignResult:
        return run_campaign(theorem, self.config, **options)

