"""Table, JSON and CSV renderings of reports and record lists."""
import csv
import io
import json
from typing import Any, Dict, List, Literal, Optional, Sequence

from jinja2 import Template
from pydantic import BaseModel, TypeAdapter

from genus3.config import settings
from genus3.schemas import EnumerationResult, OracleReport, VerificationReport

ReportFormat = Literal['table', 'json', 'csv']
FORMATS = ('table', 'json', 'csv')


def _template(name: str) -> Template:
    with open(settings.templates_dir / name, "r", encoding="utf-8") as f:
        return Template(f.read(), keep_trailing_newline=True)


def _cell(value: Any) -> Any:
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    return "" if value is None else value


def _csv(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({column: _cell(row.get(column)) for column in columns})
    return buffer.getvalue()


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format '{fmt}'; choose from {', '.join(FORMATS)}")


def render_verification(report: VerificationReport, fmt: ReportFormat = 'table') -> str:
    _check_format(fmt)
    if fmt == 'json':
        return report.model_dump_json(indent=2) + "\n"
    if fmt == 'csv':
        columns = ('key', 'kind', 'expected', 'recomputed', 'note', 'whitelisted', 'unexpected')
        return _csv([v.model_dump() for v in report.verdicts], columns)
    return _template("verification_report.txt").render(report=report)


def render_enumeration(result: EnumerationResult, fmt: ReportFormat = 'table') -> str:
    _check_format(fmt)
    if fmt == 'json':
        return result.model_dump_json(indent=2) + "\n"
    if fmt == 'csv':
        rows = [{
            'd': c.d, 'n': c.n, 'splitting': list(c.splitting), 'status': c.status,
            'rule': c.trace.rule if c.trace else None,
            'detail': c.trace.detail if c.trace else None,
            'citation': c.trace.citation if c.trace else None,
            'printed_status': c.printed_status,
        } for c in result.candidates]
        return _csv(rows, ('d', 'n', 'splitting', 'status', 'rule', 'detail', 'citation',
                           'printed_status'))
    return _template("enumeration.txt").render(result=result)


def render_oracle(report: OracleReport, fmt: ReportFormat = 'table') -> str:
    _check_format(fmt)
    data = report.model_dump()
    data['exit_status'] = report.exit_status
    if fmt == 'json':
        return json.dumps(data, indent=2) + "\n"
    if fmt == 'csv':
        probe = data.pop('printed_identity_probe')
        data['printed_identity_holds'] = probe['holds']
        data['mismatch_samples'] = len(data['mismatch_samples'])
        return _csv([data], list(data))
    return _template("oracle_report.txt").render(report=report,
                                                probe=report.printed_identity_probe)


def render_records(records: Sequence[BaseModel], fmt: ReportFormat = 'table',
                   title: Optional[str] = None) -> str:
    """Any flat list of models: branches, Veronese solutions, deg T rows, notes."""
    _check_format(fmt)
    if fmt == 'json':
        adapter = TypeAdapter(List[type(records[0])]) if records else TypeAdapter(List[Any])
        return adapter.dump_json(list(records), indent=2).decode() + "\n"
    rows = [record.model_dump() for record in records]
    columns = list(rows[0]) if rows else []
    if fmt == 'csv':
        return _csv(rows, columns)
    cells = [[_cell(row[column]) for column in columns] for row in rows]
    return _template("records.txt").render(title=title, columns=columns, rows=cells)


def render_report(report: BaseModel, fmt: ReportFormat = 'table') -> str:
    if isinstance(report, VerificationReport):
        return render_verification(report, fmt)
    if isinstance(report, EnumerationResult):
        return render_enumeration(report, fmt)
    if isinstance(report, OracleReport):
        return render_oracle(report, fmt)
    return render_records([report], fmt)
