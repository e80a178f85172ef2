import logging
from queue import Queue
from threading import Event, Lock, Thread, TIMEOUT_MAX

log = logging.getLogger(__name__)

_WORKER_EXITED = object()


class _Failed(object):
    def __init__(self, error):
        self.error = error


class _SharedCursor(object):
    """Hands out (index, point) pairs to several workers"""
    def __init__(self, points):
        self._points = enumerate(points)
        self._lock = Lock()

    def __iter__(self):
        return self

    def __next__(self):
        with self._lock:
            return next(self._points)


class GridPool(object):
    """
    Evaluates one run per grid point on `workers` threads. Results come back
    in grid order; a failed point re-raises its exception once every earlier
    point has been yielded, and the remaining workers stop picking up points.

    Examples:
    ```python
        pool = GridPool(4)
        reports = list(pool.map(lambda t: operation.run({'t': t}), values))
    ```
    """
    def __init__(self, workers = 1):
        self.workers = max(1, workers)
        self._finished = Queue()
        self._stop = Event()
        self._threads = []

    def map(self, run, points):
        self._stop.clear()
        cursor = _SharedCursor(points)
        self._threads = [
            Thread(name = "grid-{0}".format(i), target = self._worker(run, cursor), daemon = True)
            for i in range(self.workers)
        ]
        for thread in self._threads:
            thread.start()
        return self._in_order()

    def stop(self, wait = True):
        self._stop.set()
        if wait:
            for thread in self._threads:
                thread.join()

    def _worker(self, run, cursor):
        def work():
            for index, point in cursor:
                try:
                    self._finished.put((index, run(point)))
                except Exception as e:
                    log.debug('grid point %s failed: %s', index, e)
                    self._finished.put((index, _Failed(e)))
                if self._stop.is_set():
                    break
            self._finished.put(_WORKER_EXITED)
        return work

    def _in_order(self):
        exited = 0
        waiting = {}
        cursor = 0
        while True:
            while cursor in waiting:
                result = waiting.pop(cursor)
                cursor += 1
                if isinstance(result, _Failed):
                    self.stop(wait = False)
                    raise result.error
                yield result
            if exited == self.workers:
                return
            # a bare get() cannot be interrupted by ^C
            item = self._finished.get(True, TIMEOUT_MAX)
            if item is _WORKER_EXITED:
                exited += 1
            else:
                index, result = item
                waiting[index] = result
