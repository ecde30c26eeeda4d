#
# JSON reports
#
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from ._util import digest

__all__ = ['SCHEMA_VERSION', 'Report']

SCHEMA_VERSION = 1


@dataclass
class Report:
    """
    Result of one command, serialized as JSON.

    Checks are recorded in insertion order, which callers keep canonical, so the output only depends on the inputs.
    Timings are only recorded when requested.

    Args:
        command (list): Command line echo
        timing (bool, optional): Whether to record timings; Default **False**
    """
    command: list
    timing: bool = False
    inputs: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def add_input(self, name, text):
        self.inputs[name] = digest(text)

    def add_check(self, name, verdict, witness=None):
        """ Record a verdict; ``None`` means the check does not apply. """
        self.checks[name] = verdict
        if witness is not None:
            self.witnesses[name] = witness

    @contextmanager
    def timed(self, name):
        begin = time.perf_counter()
        try:
            yield
        finally:
            if self.timing:
                self.timings[name] = round(time.perf_counter() - begin, 3)

    @property
    def ok(self):
        return all(verdict is not False for verdict in self.checks.values())

    def to_dict(self):
        data = {
            'schema_version': SCHEMA_VERSION,
            'command': list(self.command),
            'inputs': dict(self.inputs),
            'checks': dict(self.checks),
            'witnesses': dict(self.witnesses),
            'results': dict(self.results),
            'ok': self.ok,
        }
        if self.timing:
            data['timing'] = dict(self.timings)
        return data

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent) + '\n'
