"""Parameter scans over the additive family and the sink/wall comparison."""
from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .additive import AdditiveParams, period_formula, reduce_params
from .nimcore import as_set
from .period import PeriodInfo, detect_period, minimal_rotation_equivalent

CSV_FIELDS = ["m", "delta", "d", "case", "formula_period", "preperiod", "period",
              "match", "wall_period", "rotation_dual"]


@dataclass(frozen=True)
class DualityRecord:
    moves: tuple[int, ...]
    sink: PeriodInfo
    wall: PeriodInfo

    @property
    def same_length(self) -> bool:
        return self.sink.period == self.wall.period

    @property
    def rotation_dual(self) -> bool:
        return minimal_rotation_equivalent(self.sink.period_word, self.wall.period_word)

    def format(self) -> str:
        S = "{" + ",".join(map(str, self.moves)) + "}"
        return (
            f"set={S}\n"
            f"sink preperiod={self.sink.preperiod} period={self.sink.period} word={self.sink.word}\n"
            f"wall preperiod={self.wall.preperiod} period={self.wall.period} word={self.wall.word}\n"
            f"same_length={str(self.same_length).lower()} "
            f"rotation_dual={str(self.rotation_dual).lower()}"
        )


def duality_report(game, horizon: int | None = None) -> DualityRecord:
    """Sink and wall periods of the same set.  Reports, never asserts, duality."""
    moves = game.moves if isinstance(game, AdditiveParams) else as_set(game).moves
    return DualityRecord(
        moves,
        detect_period(moves, "sink", horizon),
        detect_period(moves, "wall", horizon),
    )


@dataclass(frozen=True)
class ScanRow:
    m: int
    delta: int
    d: int
    case_tag: str
    formula_period: int
    detected_preperiod: int
    detected_period: int
    wall_period: int
    rotation_dual: bool

    @property
    def match(self) -> bool:
        return self.detected_preperiod == 0 and self.detected_period == self.formula_period

    def as_csv_row(self) -> list:
        return [self.m, self.delta, self.d, self.case_tag, self.formula_period,
                self.detected_preperiod, self.detected_period, int(self.match),
                self.wall_period, int(self.rotation_dual)]


def scan_point(m: int, delta: int) -> ScanRow:
    p = reduce_params(m, delta)
    rep = duality_report(p)
    return ScanRow(m, delta, p.d, p.case.value, period_formula(p),
                   rep.sink.preperiod, rep.sink.period, rep.wall.period, rep.rotation_dual)


def _scan_star(args):
    return scan_point(*args)


def scan_rows(m_max: int, delta_max: int, jobs: int = 1) -> list[ScanRow]:
    if m_max < 1 or delta_max < 1:
        raise ValueError("m_max and delta_max must be positive")
    points = [(m, dl) for m in range(1, m_max + 1) for dl in range(1, delta_max + 1)]
    if jobs == 1:
        rows = [scan_point(*pt) for pt in points]
    else:
        with ProcessPoolExecutor(max_workers=jobs or os.cpu_count()) as ex:
            # completion order is irrelevant; rows are re-keyed below
            rows = list(ex.map(_scan_star, points, chunksize=8))
    return sorted(rows, key=lambda r: (r.m, r.delta))


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        w.writerow(r.as_csv_row())
    return buf.getvalue()


def scan_additive(m_max: int, delta_max: int, out=None, jobs: int = 1) -> list[ScanRow]:
    """Scan ``1 <= m <= m_max``, ``1 <= delta <= delta_max``; write CSV to ``out``.

    ``out`` may be a path, a text stream, or ``None``.
    """
    rows = scan_rows(m_max, delta_max, jobs)
    text = rows_to_csv(rows)
    if isinstance(out, (str, os.PathLike)):
        with open(out, "w", newline="") as fh:
            fh.write(text)
    elif out is not None:
        out.write(text)
    return rows


def summarize(rows) -> str:
    rows = list(rows)
    matches = sum(r.match for r in rows)
    same = sum(r.detected_period == r.wall_period for r in rows)
    rot = sum(r.rotation_dual for r in rows)
    return (f"rows={len(rows)} match={matches} mismatch={len(rows) - matches} "
            f"wall_same_length={same} rotation_dual={rot}")


def duality_table(m_max: int, delta_factor: int = 3) -> list[DualityRecord]:
    """Duality records for all additive sets with ``m <= m_max``, ``delta <= delta_factor * m``."""
    return [duality_report(reduce_params(m, dl))
            for m in range(1, m_max + 1) for dl in range(1, delta_factor * m + 1)]

