"""Monthly ground climate for earth-station sites.

The built-in dataset holds 1971-2010 monthly means of relative humidity,
daily maximum and daily minimum temperature for Dhaka, Chittagong, Rajshahi
and Sylhet. The four city coordinates are standard published city-centre
values; they feed the geostationary geometry helpers only, never the fade
model.

User data comes in through one CSV schema::

    site,lat_deg,lon_deg,month,rh_pct,t_max_c,t_min_c
"""
from __future__ import annotations

import calendar
import csv
import io
from dataclasses import dataclass
from typing import BinaryIO, Iterable, NamedTuple

import numpy as np

from .errors import CompletenessError, CsvFormatError, ValidationError
from .model import T_MAX_C, T_MIN_C

CSV_HEADER = ("site", "lat_deg", "lon_deg", "month", "rh_pct", "t_max_c", "t_min_c")

MONTH_NAMES = tuple(calendar.month_abbr[m] for m in range(1, 13))


@dataclass(frozen=True)
class MonthlyRecord:
    month: int
    rh_pct: float
    t_max_c: float
    t_min_c: float

    def __post_init__(self):
        if not (isinstance(self.month, (int, np.integer)) and 1 <= self.month <= 12):
            raise ValidationError(f"month must be an integer in [1, 12], got {self.month!r}", field="month")
        if not (0.0 <= self.rh_pct <= 100.0):
            raise ValidationError(f"rh_pct must lie in [0, 100], got {self.rh_pct!r}", field="rh_pct")
        for name in ("t_max_c", "t_min_c"):
            v = getattr(self, name)
            if not (T_MIN_C <= v <= T_MAX_C):
                raise ValidationError(f"{name} must lie in [{T_MIN_C:g}, {T_MAX_C:g}], got {v!r}", field=name)
        if self.t_min_c > self.t_max_c:
            raise ValidationError(
                f"t_min_c ({self.t_min_c!r}) must not exceed t_max_c ({self.t_max_c!r})", field="t_min_c"
            )


class Location(NamedTuple):
    name: str
    latitude_deg: float
    longitude_deg: float


@dataclass(frozen=True)
class SiteClimate:
    name: str
    latitude_deg: float
    longitude_deg: float
    months: tuple  # 12 MonthlyRecord, January first

    def __post_init__(self):
        if not (-90.0 <= self.latitude_deg <= 90.0):
            raise ValidationError(f"latitude must lie in [-90, 90], got {self.latitude_deg!r}", field="lat_deg")
        if not (-180.0 <= self.longitude_deg <= 180.0):
            raise ValidationError(f"longitude must lie in [-180, 180], got {self.longitude_deg!r}", field="lon_deg")
        records = sorted(self.months, key=lambda r: r.month)
        seen = [r.month for r in records]
        for m in range(1, 13):
            if seen.count(m) > 1:
                raise CompletenessError(f"site {self.name!r}: month {m} appears {seen.count(m)} times", self.name, m)
            if m not in seen:
                raise CompletenessError(f"site {self.name!r}: month {m} is missing", self.name, m)
        object.__setattr__(self, "months", tuple(records))

    def month(self, m: int) -> MonthlyRecord:
        return self.months[m - 1]

    @property
    def rh_pct(self) -> np.ndarray:
        return np.array([r.rh_pct for r in self.months])

    @property
    def t_max_c(self) -> np.ndarray:
        return np.array([r.t_max_c for r in self.months])

    @property
    def t_min_c(self) -> np.ndarray:
        return np.array([r.t_min_c for r in self.months])

    def temperatures(self, series: str) -> np.ndarray:
        if series == "max":
            return self.t_max_c
        if series == "min":
            return self.t_min_c
        raise ValueError(f"series must be 'max' or 'min', got {series!r}")

    @property
    def location(self) -> Location:
        return Location(self.name, self.latitude_deg, self.longitude_deg)


# Tables of monthly means, January..December.
_RH = {
    "Dhaka": (70, 64, 62, 71, 77, 83, 84, 83, 83, 79, 73, 72),
    "Chittagong": (73, 70, 72, 77, 80, 84, 86, 85, 84, 82, 78, 75),
    "Rajshahi": (76, 69, 61, 64, 74, 83, 87, 86, 86, 82, 77, 76),
    "Sylhet": (74, 68, 67, 76, 81, 87, 87, 86, 86, 83, 77, 75),
}
_T_MAX = {
    "Dhaka": (25, 28, 32, 34, 33, 32, 32, 32, 32, 32, 29, 26),
    "Chittagong": (26, 28, 31, 32, 32, 32, 31, 31, 32, 32, 30, 27),
    "Rajshahi": (24, 28, 33, 36, 35, 34, 32, 33, 32, 32, 29, 26),
    "Sylhet": (25, 28, 31, 31, 31, 31, 31, 32, 31, 31, 29, 27),
}
_T_MIN = {
    "Dhaka": (13, 16, 21, 24, 25, 26, 26, 26, 26, 24, 19, 14),
    "Chittagong": (14, 16, 20, 24, 25, 25, 25, 25, 25, 24, 20, 16),
    "Rajshahi": (11, 13, 18, 23, 24, 26, 26, 26, 26, 23, 18, 13),
    "Sylhet": (13, 15, 18, 21, 23, 24, 25, 25, 25, 23, 19, 14),
}
# Not part of the climate tables; city-centre coordinates.
_COORDS = {
    "Dhaka": (23.8103, 90.4125),
    "Chittagong": (22.3569, 91.7832),
    "Rajshahi": (24.3745, 88.6042),
    "Sylhet": (24.8949, 91.8687),
}

TETULIA = Location("Tetulia", 26.5, 88.34)
TEKNAF = Location("Teknaf", 20.86, 92.23)
# North-west and south-east corners of Bangladesh.
TERRITORY_EXTREMES = (TETULIA, TEKNAF)


def builtin_dataset() -> list[SiteClimate]:
    """The four Bangladeshi cities, in table order."""
    sites = []
    for name, (lat, lon) in _COORDS.items():
        months = tuple(
            MonthlyRecord(m + 1, float(_RH[name][m]), float(_T_MAX[name][m]), float(_T_MIN[name][m]))
            for m in range(12)
        )
        sites.append(SiteClimate(name, lat, lon, months))
    return sites


def find_site(name: str, sites: Iterable[SiteClimate] | None = None) -> SiteClimate:
    sites = list(builtin_dataset() if sites is None else sites)
    for s in sites:
        if s.name.lower() == name.lower():
            return s
    known = ", ".join(s.name for s in sites)
    raise ValidationError(f"unknown site {name!r}; available: {known}", field="site")


def annual_means(site: SiteClimate) -> tuple[float, float, float]:
    """Mean of the 12 monthly values: ``(rh_pct, t_max_c, t_min_c)``."""
    return float(np.mean(site.rh_pct)), float(np.mean(site.t_max_c)), float(np.mean(site.t_min_c))


def _fmt(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else repr(float(v))


def dump_csv(sites: Iterable[SiteClimate]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for s in sites:
        for r in s.months:
            w.writerow(
                [s.name, _fmt(s.latitude_deg), _fmt(s.longitude_deg), r.month, _fmt(r.rh_pct), _fmt(r.t_max_c), _fmt(r.t_min_c)]
            )
    return buf.getvalue()


def export_csv(sites: Iterable[SiteClimate], stream: BinaryIO) -> None:
    stream.write(dump_csv(sites).encode("utf-8"))


def _read_text(source) -> str:
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, (bytes, bytearray)):
        return data.decode("utf-8-sig")
    return data


def _parse(source, collect):
    """Parse CSV text into sites, collecting or raising errors.

    With ``collect=True`` every problem is returned as an exception object and
    parsing continues; otherwise the first problem is raised.
    """
    problems = []

    def fail(exc):
        if not collect:
            raise exc
        problems.append(exc)

    try:
        text = _read_text(source)
    except UnicodeDecodeError as exc:
        fail(CsvFormatError(f"input is not valid UTF-8: {exc}", line=None))
        return [], problems
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(h.strip() for h in header) != CSV_HEADER:
        fail(CsvFormatError(f"line 1: header must be {','.join(CSV_HEADER)}, got {header!r}", line=1))
        return [], problems

    grouped: dict[str, dict] = {}
    for row in reader:
        line = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(CSV_HEADER):
            fail(CsvFormatError(f"line {line}: expected {len(CSV_HEADER)} fields, got {len(row)}", line=line))
            continue
        name = row[0].strip()
        if not name:
            fail(CsvFormatError(f"line {line}: empty site name", line=line, field="site"))
            continue
        try:
            lat, lon = float(row[1]), float(row[2])
            month_f = float(row[3])
            rh, tmax, tmin = float(row[4]), float(row[5]), float(row[6])
        except ValueError as exc:
            fail(CsvFormatError(f"line {line}: {exc}", line=line))
            continue
        if not month_f.is_integer():
            fail(CsvFormatError(f"line {line}: month must be an integer 1-12, got {row[3]!r}", line=line, field="month"))
            continue
        try:
            rec = MonthlyRecord(int(month_f), rh, tmax, tmin)
        except ValidationError as exc:
            fail(ValidationError(f"line {line}: {exc}", field=exc.field))
            continue
        entry = grouped.setdefault(name, {"coords": (lat, lon), "line": line, "months": []})
        if entry["coords"] != (lat, lon):
            fail(CsvFormatError(f"line {line}: site {name!r} coordinates differ from line {entry['line']}", line=line))
            continue
        entry["months"].append(rec)

    sites = []
    for name, entry in grouped.items():
        try:
            sites.append(SiteClimate(name, entry["coords"][0], entry["coords"][1], tuple(entry["months"])))
        except ValidationError as exc:
            fail(exc)
    return sites, problems


def load_csv(source) -> list[SiteClimate]:
    """Read sites from a UTF-8 CSV byte stream (or bytes / str).

    Raises :class:`CsvFormatError` for unparsable rows,
    :class:`CompletenessError` for missing or duplicated months and
    :class:`ValidationError` for out-of-range values.
    """
    sites, _ = _parse(source, collect=False)
    return sites


def validate_csv(source) -> list[ValidationError]:
    """Every problem in a CSV file; an empty list means it loads cleanly."""
    return _parse(source, collect=True)[1]
