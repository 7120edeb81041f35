import json


def report_to_dict(report, with_time=True):
    res = {
        "accuracy": report.accuracy,
        "classes": list(report.confusion.classes),
        "confusion": [list(row) for row in report.confusion.counts],
        "per_shape": [
            {"id": r.shape_id, "true": r.true, "pred": r.predicted, "nn": r.nearest_id, "score": r.score}
            for r in report.per_shape
        ],
    }
    if with_time:
        res["wall_time_s"] = report.wall_time
    return res


def format_report(report):
    return json.dumps(report_to_dict(report), sort_keys=True, indent=4) + "\n"


class ReportPrinter:
    def __init__(self, outpath, report):
        with outpath.open("w", encoding="utf-8") as fh:
            fh.write(format_report(report))
