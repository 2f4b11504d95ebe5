from datetime import datetime, timezone

from planarmono import models


def test_conversion():
    class Example(models.Model):
        foo = int

    original = {"foo": "5", "bar": 3, "baz": "4"}
    modified = {"foo": 5, "bar": 3, "baz": "4"}
    assert Example.convert_one(original) == modified


def test_conversions_skip_private_names():
    class Example(models.Model):
        _hidden = int
        foo = str

    assert set(Example.conversions) == {"foo"}


def test_search_report_timestamp():
    report = models.SearchReport.convert_one(
        {"q": 9, "timestamp": "2024-02-29T12:30:00Z"}
    )
    assert report == {
        "q": 9,
        "timestamp": datetime(2024, 2, 29, 12, 30, tzinfo=timezone.utc),
    }
