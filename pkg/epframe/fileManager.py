# =============================================================================
# ~/epframe/epframe/fileManager.py
#
# created  18 October 2026
# modified
#
# This py-file contains the document input/output functions, initiated by
#
# from epframe import fileManager
#
# and individual functions called by:
#
# 1. fileManager.read_document(location)
# 2. fileManager.write_document(text, location)
# 3. fileManager.load_instance(location)
#    note: "-" or None stands for standard input/output.
#
# =============================================================================

import logging
import sys

from epframe.gallery import Instance
from epframe.graph import parse_graph

_logger = logging.getLogger("epframe.fileManager")


def _is_stream(location):
    return location is None or location == "-"


def read_document(location=None):
    """
    Use case: read_document("g.txt") or read_document("-")
    Note: A graph document is small text; it is read whole.
    """
    if _is_stream(location):
        return sys.stdin.read()
    with open(location, "r", encoding="utf-8") as handle:
        return handle.read()


def write_document(text, location=None):
    """
    Use case: write_document(cert.to_document(g), "cert.json")
    Note: Newlines are written as "\\n" on every platform so that repeated
          runs are byte-identical.
    """
    if _is_stream(location):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(location, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    _logger.debug("wrote %d characters to %s", len(text), location)


def load_instance(location=None):
    """
    Use case: load_instance("wall.txt")
    Note: The leading comment of a gallery document is kept as the header;
          the family name is not re-derived from it.
    """
    text = read_document(location)
    g, A, B, lab = parse_graph(text)
    header = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line.startswith("#"):
            break
        header.append(line[1:].strip())
    return Instance(g, A, B, lab, header=header)
