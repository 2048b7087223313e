# ~/epframe/epframe/resultsManager.py
import logging

_logger = logging.getLogger("epframe.resultsManager")


def _path_line(g, p):
    return "path: " + " ".join(g.name(v) for v in p.vertices)


class ResultsManager(object):

    def __init__(self):
        pass

    @staticmethod
    def report_document( report ):
        lines = ["status: " + ("pass" if report.passed else "fail")]
        lines += ["violation: " + v for v in report.violations]
        lines += ["note: " + n for n in report.notes]
        return "\n".join(lines) + "\n"

    @staticmethod
    def oracle_document( g, question, spec, value, witness=(), items=None, mode=None ):
        """
        ``value`` is an int, or None when a capped search found nothing;
        ``witness`` holds paths and ``items`` hitting-set ids.
        """
        lines = ["question: " + question, "spec: " + str(spec)]
        if mode is not None:
            lines.append("mode: " + mode)
        lines.append("value: " + ("none" if value is None else str(value)))
        lines += [_path_line(g, p) for p in witness]
        if items is not None:
            if mode == "edge":
                for eid in sorted(items):
                    e = g.edge(eid)
                    lines.append("item: {} {}".format(g.name(e.u), g.name(e.v)))
            else:
                lines += ["item: " + g.name(v) for v in sorted(items)]
        return "\n".join(lines) + "\n"

    @staticmethod
    def batch_document( entries ):
        """``entries`` is a list of (location, status, text) in input order."""
        chunks = []
        for location, status, text in entries:
            chunks.append("== {} (exit {})\n{}".format(location, status, text))
        return "".join(chunks)
