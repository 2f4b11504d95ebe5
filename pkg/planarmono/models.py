from __future__ import annotations

from typing import Any, Callable, Dict

from . import utils


class model(type):
    @property
    def conversions(cls) -> Dict[str, Callable[[Any], Any]]:
        return {k: v for k, v in vars(cls).items() if not k.startswith("_")}


class Model(metaclass=model):
    """Field conversions applied to records read back from disk.

    Subclasses list ``field = converter`` pairs as class attributes.
    """

    @classmethod
    def convert_one(cls, data: Dict[str, Any]) -> Dict[str, Any]:
        for k in set(data) & set(cls.conversions):
            data[k] = cls.conversions[k](data[k])
        return data


class SearchReport(Model):
    timestamp = utils.datetime_from_str
