"""
Verification report documents.
"""
from typing import Any, Dict, List

VERDICTS = ('pass', 'fail', 'skipped')


class CheckRecord:
    def __init__(self, name: str, inputs: Dict[str, Any], verdict: str,
                 witness: Any = None, millis: int = 0):
        if verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}, got {verdict!r}")
        self.name = name
        self.inputs = inputs or {}
        self.verdict = verdict
        self.witness = witness if witness is not None else {}
        self.millis = millis

    @property
    def reason(self):
        if isinstance(self.witness, dict):
            return self.witness.get('reason')
        return None

    def to_dict(self):
        return {
            'name': self.name,
            'inputs': self.inputs,
            'verdict': self.verdict,
            'witness': self.witness,
            'millis': self.millis,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CheckRecord':
        return cls(data['name'], data.get('inputs', {}), data['verdict'],
                   data.get('witness'), data.get('millis', 0))


class ReportDocument:
    def __init__(self, version: str, command: str, checks: List[CheckRecord] = None):
        self.version = version
        self.command = command
        self.checks = checks or []

    def count(self, verdict: str) -> int:
        return sum(1 for c in self.checks if c.verdict == verdict)

    @property
    def exit_code(self) -> int:
        return 1 if self.count('fail') else 0

    def to_dict(self):
        return {
            'version': self.version,
            'command': self.command,
            'checks': [c.to_dict() for c in self.checks],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'ReportDocument':
        return cls(data['version'], data['command'],
                   [CheckRecord.from_dict(c) for c in data.get('checks', [])])
