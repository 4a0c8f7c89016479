import time


class Timer:
    """
    Monotonic stopwatch reporting whole microseconds.

    >>> with Timer() as t:
    >>>     run_query()
    >>> print(t.micros)
    """

    def __init__(self):
        self._start = None
        self.micros = 0

    def __enter__(self):
        self._start = time.perf_counter_ns()
        return self

    def __exit__(self, *exc_info):
        self.micros = (time.perf_counter_ns() - self._start) // 1000
        return False
