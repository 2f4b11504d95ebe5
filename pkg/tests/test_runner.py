from unittest import mock

import pytest

from planarmono import exceptions, runner


def square(n):
    return n * n


def explode(n):
    raise ArithmeticError(f"bad item {n}")


def test_serial_map():
    assert runner.Runner(1).map(square, [3, 1, 2]) == [9, 1, 4]


def test_parallel_map_keeps_order():
    items = list(range(20))
    assert runner.Runner(2).map(square, items) == [n * n for n in items]


def test_rejects_no_workers():
    with pytest.raises(ValueError):
        runner.Runner(0)


def test_clamps_to_cpu_count():
    with mock.patch("os.cpu_count", return_value=2):
        assert runner.Runner(8).workers == 2


def test_parallel_flag():
    assert not runner.SERIAL.parallel
    with mock.patch("os.cpu_count", return_value=4):
        assert runner.Runner(3).parallel


def test_failure_is_wrapped():
    with pytest.raises(exceptions.TaskError) as exc_info:
        runner.Runner(1).map(explode, [7])
    assert exc_info.value.message == "bad item 7"
    assert isinstance(exc_info.value.error, ArithmeticError)


def test_parallel_failure_is_wrapped():
    with mock.patch("os.cpu_count", return_value=2):
        pool = runner.Runner(2)
    with pytest.raises(exceptions.TaskError):
        pool.map(explode, [1, 2, 3])
