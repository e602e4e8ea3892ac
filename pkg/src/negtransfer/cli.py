"""negtransfer command line: translate, goldtest, report."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .hangul import ConjugationError, ConjugationTable, default_table
from .lexicons import LexiconError, RuleLexicons, default_lexicon_dir
from .pipeline import CategoryReport, translate
from .planner import FrameError, PlanError
from .records import RecordError, read_records

EXIT_OK, EXIT_RECORD, EXIT_CONFIG = 0, 1, 2

RECORD_ERRORS = (RecordError, ConjugationError, FrameError, PlanError, AssertionError)


def _load(lexicons: str | None) -> tuple[RuleLexicons, ConjugationTable]:
    directory = Path(lexicons) if lexicons else default_lexicon_dir()
    try:
        lex = RuleLexicons.load(directory)
        conj = directory / "conjugations.tsv"
        table = ConjugationTable.load(conj) if conj.is_file() else default_table()
    except (LexiconError, ConjugationError, OSError) as exc:
        click.echo(f"negtransfer: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    return lex, table


def _outcomes(input_path, lex, table):
    """Yield (label, outcome-or-exception) in input order."""
    for lineno, rec in read_records(input_path):
        if isinstance(rec, RecordError):
            yield f"line {lineno}", rec
            continue
        try:
            yield rec.id, translate(rec, lex, table)
        except RECORD_ERRORS as exc:
            yield rec.id, exc


_common = [
    click.option("--input", "input_path", required=True,
                 type=click.Path(exists=True, dir_okay=False), help="JSON-lines record file."),
    click.option("--lexicons", type=click.Path(file_okay=False),
                 help="Directory of rule tables (default: the bundled set)."),
    click.option("--format", "fmt", type=click.Choice(["text", "delimited"]), default="text",
                 show_default=True),
]


def common(f):
    for opt in reversed(_common):
        f = opt(f)
    return f


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Transfer English negation onto Korean affirmative frames."""


@main.command("translate")
@common
@click.option("--trace", is_flag=True, help="Print the edits applied to each sentence.")
def translate_cmd(input_path, lexicons, fmt, trace):
    """Print the Korean sentence for every record."""
    lex, table = _load(lexicons)
    status = EXIT_OK
    for label, out in _outcomes(input_path, lex, table):
        if isinstance(out, Exception):
            status = EXIT_RECORD
            click.echo(f"{label}\tERROR\t{out}" if fmt == "delimited" else f"{label}: ERROR {out}")
            continue
        a = out.analysis
        plan_text = out.plan.summary() if out.plan else "-"
        if fmt == "delimited":
            click.echo("\t".join((label, out.realized.text, a.structure.value, a.kind.value, plan_text)))
        else:
            click.echo(f"{label}: {out.realized.text}")
            click.echo(f"    {a.summary()} plan={plan_text}")
        if trace:
            for step in out.realized.trace:
                click.echo(f"    trace\t{step}" if fmt == "delimited" else f"    . {step}")
    sys.exit(status)


@main.command("goldtest")
@common
def goldtest_cmd(input_path, lexicons, fmt):
    """Compare every output byte-for-byte with its gold sentence."""
    lex, table = _load(lexicons)
    passed = failed = 0
    for label, out in _outcomes(input_path, lex, table):
        if isinstance(out, Exception):
            failed += 1
            reason, expected, actual = f"error: {out}", "", ""
        elif out.record.gold is None:
            failed += 1
            reason, expected, actual = "record has no gold", "", out.realized.text
        elif out.realized.text != out.record.gold:
            failed += 1
            reason, expected, actual = "mismatch", out.record.gold, out.realized.text
        else:
            passed += 1
            continue
        if fmt == "delimited":
            click.echo("\t".join(("FAIL", label, reason, expected, actual)))
        else:
            click.echo(f"FAIL {label}: {reason}")
            if expected or actual:
                click.echo(f"    expected: {expected}")
                click.echo(f"    actual:   {actual}")
    click.echo(f"{passed} passed, {failed} failed")
    sys.exit(EXIT_OK if failed == 0 else EXIT_RECORD)


@main.command("report")
@common
def report_cmd(input_path, lexicons, fmt):
    """Count records per negation structure and kind."""
    lex, table = _load(lexicons)
    analyses, status = [], EXIT_OK
    for label, out in _outcomes(input_path, lex, table):
        if isinstance(out, Exception):
            status = EXIT_RECORD
            click.echo(f"{label}: ERROR {out}", err=True)
            continue
        analyses.append(out.analysis)
    click.echo(CategoryReport.from_analyses(analyses).render(delimited=fmt == "delimited"))
    sys.exit(status)


if __name__ == "__main__":
    main()
