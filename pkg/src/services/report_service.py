import csv
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List

from src.config import Config
from src.models.errors import OutOfRangeError, VerificationError
from src.models.report_models import CheckRecord, ReportDocument
from src.services.trace import trace

CSV_HEADER = ['name', 'inputs', 'verdict', 'witness', 'millis']
WITNESS_WIDTH = 72


class CheckTask:
    """A named, independent check; fn returns a witness (dict with 'holds') or a bool"""

    def __init__(self, name: str, inputs: Dict[str, Any], fn: Callable[[], Any]):
        self.name = name
        self.inputs = inputs
        self.fn = fn


class ReportService:
    def run_check(self, task: CheckTask) -> CheckRecord:
        """
        Run one check and classify it.

        OutOfRangeError means the inputs are outside the supported range (skipped);
        VerificationError and anything else, plain ValueError included, is a failure.
        """
        start = time.perf_counter()
        try:
            result = task.fn()
            witness = plain(result)
            if isinstance(result, bool):
                holds, witness = result, {'holds': result}
            elif isinstance(witness, dict):
                holds = bool(witness.get('holds', True))
            else:
                holds, witness = True, {'value': witness}
            verdict = 'pass' if holds else 'fail'
        except OutOfRangeError as e:
            trace('REPORT', f"⚠️ {task.name} skipped: {e}")
            verdict, witness = 'skipped', {'reason': str(e)}
        except VerificationError as e:
            trace('REPORT', f"❌ {task.name} failed: {e}")
            verdict, witness = 'fail', {'reason': str(e), 'error': type(e).__name__}
        except Exception as e:
            trace('REPORT', f"❌ {task.name} crashed: {e}")
            verdict, witness = 'fail', {'reason': str(e), 'error': type(e).__name__}
        millis = int((time.perf_counter() - start) * 1000) if Config.RECORD_TIMINGS else 0
        return CheckRecord(task.name, plain(task.inputs), verdict, witness, millis)

    def run_checks(self, tasks: List[CheckTask], jobs: int = None) -> List[CheckRecord]:
        """Records come back in submission order whatever the completion order"""
        jobs = jobs or Config.JOBS
        trace('REPORT', f"running {len(tasks)} checks with {jobs} worker(s)")
        if jobs <= 1:
            return [self.run_check(t) for t in tasks]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(self.run_check, tasks))

    def build(self, command: str, tasks: List[CheckTask], jobs: int = None) -> ReportDocument:
        return ReportDocument(Config.VERSION, command, self.run_checks(tasks, jobs))

    def render(self, document: ReportDocument, fmt: str = None) -> str:
        fmt = fmt or Config.OUTPUT_FORMAT
        if fmt not in Config.OUTPUT_FORMATS:
            raise ValueError(f"format must be one of {Config.OUTPUT_FORMATS}, got {fmt!r}")
        if fmt == 'json':
            return json.dumps(document.to_dict(), indent=2, sort_keys=True)
        if fmt == 'csv':
            return self.render_csv(document)
        return self.render_table(document)

    def render_table(self, document: ReportDocument) -> str:
        """Plain table; millis are left out so the table is a function of the JSON content"""
        rows = [['name', 'inputs', 'verdict', 'witness']]
        for record in document.checks:
            rows.append([
                record.name,
                _compact(record.inputs),
                record.verdict.upper(),
                _summarize(record.witness),
            ])
        widths = [max(len(r[i]) for r in rows) for i in range(3)]
        lines = [f"mck-verify {document.version} :: {document.command}"]
        for r in rows:
            lines.append("  ".join(r[i].ljust(widths[i]) for i in range(3)) + "  " + r[3])
        lines.append(
            f"{document.count('pass')} passed, {document.count('fail')} failed, "
            f"{document.count('skipped')} skipped")
        return "\n".join(line.rstrip() for line in lines)

    def render_csv(self, document: ReportDocument) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        for record in document.checks:
            writer.writerow([record.name, _compact(record.inputs), record.verdict,
                             _compact(record.witness), record.millis])
        return buffer.getvalue().rstrip('\n')

    def parse(self, text: str) -> ReportDocument:
        return ReportDocument.from_dict(json.loads(text))


def plain(value):
    """Convert service results into JSON-ready values; fractions print exactly"""
    if hasattr(value, 'to_dict'):
        return plain(value.to_dict())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(plain(k)): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


def _compact(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(',', ':'))


def _summarize(witness) -> str:
    if isinstance(witness, dict) and 'reason' in witness:
        text = witness['reason']
    elif isinstance(witness, dict):
        text = _compact({k: v for k, v in witness.items() if k != 'holds'})
    else:
        text = _compact(witness)
    return text if len(text) <= WITNESS_WIDTH else text[:WITNESS_WIDTH - 3] + "..."


# Global instance
report_service = ReportService()
