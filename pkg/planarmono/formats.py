from __future__ import annotations

import csv
from typing import (
    IO,
    Any,
    Callable,
    Dict,
    Generic,
    Iterable,
    Iterator,
    List,
    Sequence,
    TypeVar,
)

import ndjson  # type: ignore

from . import utils
from .models import SearchReport

T = TypeVar("T")

Record = Dict[str, Any]


class FormatHandler(Generic[T]):
    """Write records to, and read them back from, a text stream.

    Subclasses override :meth:`write`, :meth:`parse_stream` and optionally
    :meth:`parse`.
    """

    def handle(
        self,
        stream: IO[str],
        is_stream: bool,
        converter: Callable[[T], T] = utils.noop,
    ) -> List[T] | Iterator[T]:
        """Read records from ``stream``.

        :param stream: an open text stream
        :param bool is_stream: ``True`` to yield records lazily
        :param func converter: function to handle field conversions
        :return: either all records or an iterator over them
        """
        if is_stream:
            return map(converter, self.parse_stream(stream))
        return [converter(record) for record in self.parse(stream)]

    def write(self, records: Iterable[T], stream: IO[str]) -> None:
        raise NotImplementedError

    def parse(self, stream: IO[str]) -> List[T]:
        return list(self.parse_stream(stream))

    def parse_stream(self, stream: IO[str]) -> Iterator[T]:
        raise NotImplementedError


class JsonLinesHandler(FormatHandler[Record]):
    """One JSON document per line.

    Keys keep their insertion order, so equal records serialise to equal bytes.
    """

    def write(self, records: Iterable[Record], stream: IO[str]) -> None:
        writer = ndjson.writer(stream)  # type: ignore
        for record in records:
            writer.writerow(record)  # type: ignore
        stream.flush()

    def parse_stream(self, stream: IO[str]) -> Iterator[Record]:
        for record in ndjson.reader(stream):  # type: ignore
            yield record


class CsvHandler(FormatHandler[Record]):
    """Fixed-column CSV with a header row; booleans are written as 0 and 1.

    :param columns: column names, in output order
    :param flags: columns holding booleans
    """

    def __init__(self, columns: Sequence[str], flags: Sequence[str] = ()):
        self.columns = list(columns)
        self.flags = set(flags)

    def write(self, records: Iterable[Record], stream: IO[str]) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.columns)
        for record in records:
            writer.writerow(int(record[column]) for column in self.columns)
        stream.flush()

    def parse_stream(self, stream: IO[str]) -> Iterator[Record]:
        reader = csv.DictReader(stream)
        if reader.fieldnames != self.columns:
            raise ValueError(
                f"expected columns {self.columns}, got {reader.fieldnames}"
            )
        for row in reader:
            yield {
                column: bool(int(value)) if column in self.flags else int(value)
                for column, value in row.items()
            }


#: Search reports and other record streams
JSONL = JsonLinesHandler()

#: The sb-scan table
SCAN_CSV = CsvHandler(["t", "c_t3", "c_t7", "power_of_two"], flags=["power_of_two"])


def load_reports(path: str) -> List[Record]:
    """Read a JSON-lines file of search reports, parsing their timestamps."""
    with open(path, encoding="utf-8") as stream:
        reports = JSONL.handle(
            stream, is_stream=False, converter=SearchReport.convert_one
        )
        return list(reports)
