"""Shared record of acceptance outcomes, printed at the end of the run."""
import functools

RESULTS: dict[int, tuple[bool, str, str]] = {}


def criterion(n: int, text: str):
    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[n] = (False, text, str(exc).splitlines()[0][:160] if str(exc) else type(exc).__name__)
                print(f"criterion {n:2d}: FAIL  {text}")
                raise
            RESULTS[n] = (True, text, "")
            print(f"criterion {n:2d}: PASS  {text}")

        return inner

    return wrap
