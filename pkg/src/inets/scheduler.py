"""Worker pool and single-assignment promise/resolver cells.

The API mirrors a minimal futures library::

    create_pool(n)        -> WorkerPool
    make_future()         -> (Promise, Resolver)
    resolve(r, v)
    await_(p, k, pool)    # continuation style, never parks a worker
    block(p)              # parks the calling (driver) thread
    run_async(pool, task)

``await`` is a keyword in Python, hence ``await_``.  It takes the rest of
the computation as an explicit continuation ``k``.  If the promise is
already resolved ``k`` runs immediately on the calling thread; otherwise
``k`` is registered on the cell and the calling worker returns to the
queue.  A fixed pool of ``n`` workers therefore cannot deadlock on ``n``
outstanding awaits.
"""
from __future__ import annotations

import logging
import os
import queue
import sys
import threading
import time
from functools import partial
from typing import Any, Callable, Generic, TypeVar

log = logging.getLogger(__name__)

T = TypeVar("T")

POOL_SIZE_ENV = "INET_POOL_SIZE"

# Worker threads get a generous C stack: rule application may recurse
# through the inline fast path.
WORKER_STACK_SIZE = 64 * 1024 * 1024

_STOP = object()
_local = threading.local()


class SchedulerError(RuntimeError):
    pass


class InvalidConfiguration(SchedulerError, ValueError):
    pass


class DoubleResolution(SchedulerError):
    """A resolver was used a second time."""


class PoolFailure(SchedulerError):
    """A task running on the pool raised."""


def default_pool_size() -> int:
    raw = os.environ.get(POOL_SIZE_ENV)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        n = int(raw, 10)
    except ValueError:
        raise InvalidConfiguration(f"{POOL_SIZE_ENV}={raw!r} is not a decimal integer") from None
    if n < 1:
        raise InvalidConfiguration(f"{POOL_SIZE_ENV} must be >= 1, got {n}")
    return n


class WorkerPool:
    """A fixed set of worker threads consuming one FIFO task queue."""

    def __init__(self, worker_count: int):
        if isinstance(worker_count, bool) or not isinstance(worker_count, int):
            raise InvalidConfiguration(f"worker count must be an int, got {worker_count!r}")
        if worker_count < 1:
            raise InvalidConfiguration(f"worker count must be >= 1, got {worker_count}")
        self.worker_count = worker_count
        self._queue: queue.SimpleQueue[Any] = queue.SimpleQueue()
        self.failure: BaseException | None = None
        self._failure_lock = threading.Lock()
        self._closed = False
        # Per-thread [submitted, completed] counters; see wait_idle().
        self._tls = threading.local()
        self._tallies: list[list[int]] = []
        self._tallies_lock = threading.Lock()
        self._threads = []
        old = threading.stack_size()
        threading.stack_size(WORKER_STACK_SIZE)
        try:
            for i in range(worker_count):
                t = threading.Thread(target=self._work, name=f"inet-worker-{i}", daemon=True)
                t.start()
                self._threads.append(t)
        finally:
            threading.stack_size(old)

    def __repr__(self) -> str:
        return f"WorkerPool(worker_count={self.worker_count})"

    def __enter__(self) -> WorkerPool:
        return self

    def __exit__(self, *exc: object) -> None:
        self.shutdown()

    def submit(self, task: Callable[[], Any]) -> None:
        if self._closed:
            raise SchedulerError("pool has been shut down")
        self._tally()[0] += 1
        self._queue.put(task)

    def backlog(self) -> int:
        """Approximate number of queued, not yet started tasks."""
        return self._queue.qsize()

    def _tally(self) -> list[int]:
        try:
            return self._tls.tally  # type: ignore[no-any-return]
        except AttributeError:
            tally = self._tls.tally = [0, 0]
            with self._tallies_lock:
                self._tallies.append(tally)
            return tally

    def wait_idle(self, timeout: float | None = None) -> None:
        """Wait until every submitted task has finished.

        Completed counts are summed before submitted counts.  Both only
        grow, and a task is counted as submitted before it is queued, so
        equal sums mean nothing was queued or running in between.
        """
        if self.owns_current_thread():
            raise SchedulerError("wait_idle() called from a pool worker")
        delay = 0.0005
        waited = 0.0
        while True:
            tallies = list(self._tallies)
            done = sum(t[1] for t in tallies)
            submitted = sum(t[0] for t in list(self._tallies))
            if done == submitted:
                return
            if self.failure is not None:
                raise PoolFailure(f"reduction aborted: {self.failure!r}") from self.failure
            if timeout is not None and waited >= timeout:
                raise TimeoutError("pool did not drain in time")
            time.sleep(delay)
            waited += delay
            delay = min(delay * 2, 0.01)

    def owns_current_thread(self) -> bool:
        return getattr(_local, "pool", None) is self

    def shutdown(self) -> None:
        if self._closed:
            return
        self._closed = True
        for _ in self._threads:
            self._queue.put(_STOP)
        for t in self._threads:
            if t is not threading.current_thread():
                t.join()

    def _work(self) -> None:
        _local.pool = self
        get = self._queue.get
        tally = self._tally()
        while True:
            task = get()
            if task is _STOP:
                return
            try:
                task()
            except BaseException as exc:  # noqa: BLE001 - recorded, surfaced by block()
                self._fail(exc)
            tally[1] += 1

    def _fail(self, exc: BaseException) -> None:
        with self._failure_lock:
            if self.failure is None:
                self.failure = exc
        log.error("task on %r failed: %r", self, exc)


def create_pool(n: int | None = None) -> WorkerPool:
    """Start a pool of ``n`` workers (default: ``INET_POOL_SIZE`` or the CPU count)."""
    return WorkerPool(default_pool_size() if n is None else n)


def run_async(pool: WorkerPool, task: Callable[[], Any]) -> None:
    pool.submit(task)


def in_worker() -> bool:
    return getattr(_local, "pool", None) is not None


class _Cell:
    __slots__ = ("lock", "resolved", "value", "waiters", "event")

    def __init__(self) -> None:
        self.lock = threading.Lock()
        self.resolved = False
        self.value: Any = None
        self.waiters: list[Callable[[Any], Any]] | None = []
        self.event: threading.Event | None = None


class Promise(Generic[T]):
    __slots__ = ("_cell",)

    def __init__(self, cell: _Cell):
        self._cell = cell

    @property
    def resolved(self) -> bool:
        return self._cell.resolved

    def peek(self) -> T:
        """The resolved value; ``LookupError`` if the cell is still empty."""
        cell = self._cell
        if not cell.resolved:
            raise LookupError("promise is not resolved")
        return cell.value  # type: ignore[no-any-return]

    def __repr__(self) -> str:
        state = "resolved" if self._cell.resolved else "empty"
        return f"<Promise {state} at {id(self._cell):#x}>"


class Resolver(Generic[T]):
    __slots__ = ("_cell",)

    def __init__(self, cell: _Cell):
        self._cell = cell

    def __repr__(self) -> str:
        state = "resolved" if self._cell.resolved else "empty"
        return f"<Resolver {state} at {id(self._cell):#x}>"


def make_future() -> tuple[Promise[Any], Resolver[Any]]:
    cell = _Cell()
    return Promise(cell), Resolver(cell)


def resolve(r: Resolver[T], v: T) -> None:
    """Fill the cell and fire every registered continuation exactly once.

    Raises DoubleResolution if the cell was already resolved; the old value
    is kept.
    """
    cell = r._cell
    with cell.lock:
        if cell.resolved:
            raise DoubleResolution(f"{r!r} resolved twice")
        cell.value = v
        cell.resolved = True
        waiters = cell.waiters
        cell.waiters = None
        event = cell.event
    if event is not None:
        event.set()
    for k in waiters:  # type: ignore[union-attr]
        k(v)


def on_resolved(p: Promise[T], k: Callable[[T], Any]) -> None:
    """Call ``k(value)`` once the promise resolves, on whichever thread resolves it.

    Runs ``k`` right away if the value is already there.
    """
    cell = p._cell
    with cell.lock:
        if not cell.resolved:
            cell.waiters.append(k)  # type: ignore[union-attr]
            return
    k(cell.value)


def await_(p: Promise[T], k: Callable[[T], Any], pool: WorkerPool | None = None) -> None:
    """Continue with ``k(value)``.

    Resolved promise: ``k`` runs inline.  Empty promise: ``k`` is parked on
    the cell and later submitted to ``pool`` by the resolver, so the caller
    never holds a worker while waiting.  Without a pool the continuation
    runs directly on the resolving thread.
    """
    if pool is None:
        on_resolved(p, k)
        return
    cell = p._cell
    with cell.lock:
        if not cell.resolved:
            cell.waiters.append(lambda v: pool.submit(partial(k, v)))  # type: ignore[union-attr]
            return
    k(cell.value)


def block(p: Promise[T], pool: WorkerPool | None = None, timeout: float | None = None) -> T:
    """Park the calling thread until ``p`` resolves and return the value.

    Must be called from outside the pool: a worker that blocks is a worker
    lost to the pool.  When ``pool`` is given, a task failure on that pool
    aborts the wait with PoolFailure instead of hanging forever.
    """
    if in_worker():
        raise SchedulerError("block() called from a pool worker; use await_()")
    cell = p._cell
    with cell.lock:
        if cell.resolved:
            return cell.value  # type: ignore[no-any-return]
        if cell.event is None:
            cell.event = threading.Event()
        event = cell.event
    if pool is None:
        if not event.wait(timeout):
            raise TimeoutError("promise not resolved in time")
        return cell.value  # type: ignore[no-any-return]
    waited = 0.0
    step = 0.02
    while not event.wait(step):
        if pool.failure is not None:
            raise PoolFailure(f"reduction aborted: {pool.failure!r}") from pool.failure
        waited += step
        if timeout is not None and waited >= timeout:
            raise TimeoutError("promise not resolved in time")
    return cell.value  # type: ignore[no-any-return]


def ensure_recursion_limit(frames: int) -> None:
    if sys.getrecursionlimit() < frames:
        sys.setrecursionlimit(frames)
