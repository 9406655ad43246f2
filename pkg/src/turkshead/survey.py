"""Per-(m, n) survey rows and their table / CSV / JSON encodings."""

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import gcd
from typing import Optional

from .braid import build_thk
from .coloring import hk_verify
from .determinant import knot_determinant
from .numbertheory import is_prime
from .transfer import G

__all__ = [
    "SurveyRecord", "GdetRow", "survey_record", "run_survey", "gdet_row",
    "run_gdet", "worker_count", "to_table", "to_csv", "to_json",
    "from_csv", "from_json", "HK_SKIP_THRESHOLD", "WORKERS_ENV",
]

HK_SKIP_THRESHOLD = 10**6
WORKERS_ENV = "TURKSHEAD_WORKERS"
FIELDS = ("m", "n", "components", "determinant", "g_value", "agree",
          "det_prime", "hk_status")


@dataclass(frozen=True)
class SurveyRecord:
    m: int
    n: int
    components: int
    determinant: str
    g_value: Optional[str]
    agree: Optional[bool]
    det_prime: str
    hk_status: str  # verified | not-applicable | skipped | violated

    @property
    def failed(self):
        return self.agree is False or self.hk_status == "violated"


def survey_record(m: int, n: int, force: bool = False,
                  threshold: int = HK_SKIP_THRESHOLD) -> SurveyRecord:
    d = build_thk(m, n)
    det = knot_determinant(d).value
    g_value = agree = None
    if m % 2 == 1 and m >= 3:
        g = G(m, n).value
        g_value = str(g)
        if gcd(m, n) == 1:
            agree = g == det
    verdict = is_prime(det)
    if d.component_count > 1 or not verdict.is_prime:
        hk = "not-applicable"
    elif det > threshold and not force:
        hk = "skipped"
    else:
        hk = "verified" if hk_verify(d, det, determinant=det).heterogeneous \
            else "violated"
    return SurveyRecord(m, n, d.component_count, str(det), g_value, agree,
                        verdict.status, hk)


def worker_count(requested: Optional[int] = None) -> int:
    n = requested or os.cpu_count() or 1
    cap = os.environ.get(WORKERS_ENV)
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, n)


def _star_record(args):
    return survey_record(*args)


def _pmap(fn, jobs, workers):
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map keeps submission order regardless of completion order
        return list(pool.map(fn, jobs, chunksize=1))


def run_survey(max_m: int, max_n: int, force: bool = False,
               workers: Optional[int] = None,
               threshold: int = HK_SKIP_THRESHOLD) -> list:
    """One record per 2 <= m <= max_m, 2 <= n <= max_n, m-major order."""
    if max_m < 2 or max_n < 2:
        raise ValueError("max_m and max_n must be >= 2")
    jobs = [(m, n, force, threshold) for m in range(2, max_m + 1)
            for n in range(2, max_n + 1)]
    return _pmap(_star_record, jobs, worker_count(workers))


@dataclass(frozen=True)
class GdetRow:
    m: int
    n: int
    det: str
    g: str
    agree: bool
    det_is_prime: bool
    square_witness: Optional[str]


def gdet_row(m: int, n: int) -> GdetRow:
    det = knot_determinant(build_thk(m, n)).value
    g = G(m, n)
    return GdetRow(m, n, str(det), str(g.value), g.value == det,
                   is_prime(det).is_prime,
                   None if g.root is None else str(g.root))


def _star_gdet(args):
    return gdet_row(*args)


def run_gdet(max_m: int, max_n: int, workers: Optional[int] = None) -> list:
    """Odd 3 <= m <= max_m against coprime 2 <= n <= max_n."""
    jobs = [(m, n) for m in range(3, max_m + 1, 2)
            for n in range(2, max_n + 1) if gcd(m, n) == 1]
    return _pmap(_star_gdet, jobs, worker_count(workers))


def _row_dict(r):
    return asdict(r)


def to_json(records) -> str:
    return json.dumps([_row_dict(r) for r in records], indent=2) + "\n"


def from_json(text: str) -> list:
    return [SurveyRecord(**row) for row in json.loads(text)]


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in records:
        w.writerow([_cell(getattr(r, f)) for f in FIELDS])
    return buf.getvalue()


def from_csv(text: str) -> list:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        out.append(SurveyRecord(
            m=int(row["m"]), n=int(row["n"]),
            components=int(row["components"]),
            determinant=row["determinant"],
            g_value=row["g_value"] or None,
            agree=None if row["agree"] == "" else row["agree"] == "true",
            det_prime=row["det_prime"],
            hk_status=row["hk_status"],
        ))
    return out


def to_table(records) -> str:
    rows = [FIELDS] + [tuple(_cell(getattr(r, f)) or "-" for f in FIELDS)
                       for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(FIELDS))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows]
    return "\n".join(lines) + "\n"
