"""
Facet-list text format.

One facet per line as whitespace-separated non-negative integers. ``#``
starts a comment (whole line or trailing), blank lines are ignored, and the
file is UTF-8. This format is the interchange unit of every CLI command.
"""

import hashlib
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Union

from src.models.complex import Complex, build_complex
from src.models.errors import EmptyComplexError, FacetParseError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def parse_facets(text: str, source: Optional[str] = None) -> Complex:
    """
    Parse facet-list text into a complex.

    Args:
        text: file contents
        source: name used in error messages

    Returns:
        Complex built from the listed facets

    Raises:
        FacetParseError: On a malformed line, with its 1-based line number
        EmptyComplexError: If no facet lines are present
    """
    raw: List[List[int]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        labels: List[int] = []
        for token in content.split():
            try:
                label = int(token)
            except ValueError:
                raise FacetParseError(f"not an integer: {token!r}", line_number, source) from None
            if label < 0:
                raise FacetParseError(f"negative vertex label {label}", line_number, source)
            labels.append(label)
        if len(set(labels)) != len(labels):
            raise FacetParseError("repeated vertex in facet", line_number, source)
        raw.append(labels)

    if not raw:
        raise EmptyComplexError(f"No facets found in {source or 'input'}")

    complex_ = build_complex(raw)
    dropped = len(raw) - len(complex_.facets)
    if dropped:
        logger.info(f"Dropped {dropped} duplicate or non-maximal facet lines from {source or 'input'}")
    return complex_


def read_facets(path: PathLike) -> Complex:
    """Read a facet-list file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    complex_ = parse_facets(text, source=str(path))
    logger.info(f"Loaded {complex_} from {path}")
    return complex_


def format_facets(X: Complex, header: Iterable[str] = ()) -> str:
    """Render a complex in facet-list format, facets in lexicographic order."""
    lines = [f"# {h}" for h in header]
    lines.extend(" ".join(str(v) for v in facet) for facet in X.facets)
    return "\n".join(lines) + "\n"


def write_facets(X: Complex, path: PathLike, header: Iterable[str] = ()) -> Path:
    """Write a complex to ``path`` in facet-list format."""
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_facets(X, header), encoding="utf-8")
    logger.info(f"Wrote {len(X.facets)} facets to {path}")
    return path


def file_digest(path: PathLike) -> str:
    """SHA-256 of a file, used as the subject of certificates for file input."""
    digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
    return f"sha256:{digest}"
