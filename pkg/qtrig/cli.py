# Copyright 2024 The qtrig developers

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""
Command-line interface for qtrig.

Evaluates the q-functions, tabulates them, checks the identities of q-trigonometry and
tabulates the limit defining the Daehee constant.

Usage:
    qtrig eval cosq --x 0.3 --q 0.5                 # one value, with its error estimate
    qtrig table sinq --x-min 0 --x-max 1 --x-steps 11 --q 0.5
    qtrig check all --q 0.3 --q 0.5 --seed 7        # every identity set at two values of q
    qtrig check errata --q 0.5                      # confirm the two uncorrected statements fail
    qtrig daehee-limit --n-max 50 --q 0.5 --format json

Data goes to ``--out`` (stdout by default) as CSV or JSON; the seed and the logs go to stderr.

Exit codes: 0 on success, 1 on usage errors, 2 when an evaluation raises a domain, pole or
convergence error (a JSON error record is written instead of the data) and 3 when an identity
check fails.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Any, Optional, TextIO

import click
import numpy as np
import pandas as pd

from qtrig.math.qcore import QParam
from qtrig.math.series import EvalConfig
from qtrig.special.identities import IDENTITY_SETS, SweepContext, check_identities, identity_set
from qtrig.special.qcalculus import QuadratureConfig
from qtrig.special.qfunctions import QFunctionHandle, daehee_constant, daehee_sequence_term
from qtrig.utils.errors import DomainError, QtrigError
from qtrig.utils.logger import create_logger
from qtrig.utils.progress_bar import ProgressBar
from qtrig.utils.reports import all_passed
from qtrig.utils.settings import settings

__all__ = ["cli", "main", "RunConfig"]

log = create_logger(__name__)

EXIT_USAGE = 1
EXIT_EVALUATION = 2
EXIT_CHECK_FAILED = 3

FUNCTION_NAMES = {
    "eq": "e_q",
    "Eq": "E_q",
    "sinq": "sin_q",
    "cosq": "cos_q",
    "tanq": "tan_q",
    "secq": "sec_q",
    "cscq": "csc_q",
    "cotq": "cot_q",
}

EVAL_COLUMNS = ["function", "x", "q", "value_re", "value_im", "error_estimate", "terms_used"]
TABLE_COLUMNS = ["x", "value_re", "value_im", "error_estimate", "status"]
REPORT_COLUMNS = [
    "identity_id",
    "q",
    "samples",
    "max_abs_residual",
    "argmax_input",
    "tolerance",
    "pass",
]
LIMIT_COLUMNS = ["n", "value", "gap"]


@dataclass(frozen=True)
class RunConfig:
    r"""The settings of one command-line run.

    Args:
        qs: the deformation parameters
        x_min: the first point of a table
        x_max: the last point of a table
        x_steps: the number of points of a table
        tol: overrides the relative tolerance of the series (and scales the quadrature one)
        max_terms: overrides the term cap of the series
        output_format: ``"csv"`` or ``"json"``
        seed: the seed of the randomized sweeps
    """

    qs: tuple[float, ...] = (0.5,)
    x_min: float = 0.0
    x_max: float = 1.0
    x_steps: int = 11
    tol: Optional[float] = None
    max_terms: Optional[int] = None
    output_format: str = "csv"
    seed: int = 0

    def __post_init__(self):
        if self.x_steps < 1:
            raise ValueError(f"``x_steps`` must be at least 1, got {self.x_steps}.")
        if self.x_min > self.x_max:
            raise ValueError(f"``x_min`` ({self.x_min}) must not exceed ``x_max`` ({self.x_max}).")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"Unknown output format {self.output_format!r}.")
        for q in self.qs:
            QParam(q)

    @property
    def q(self) -> float:
        r"""The first deformation parameter."""
        return self.qs[0]

    def eval_config(self) -> EvalConfig:
        r"""The series config of the run."""
        changes = {}
        if self.tol is not None:
            changes["rel_tol"] = self.tol
        if self.max_terms is not None:
            changes["max_terms"] = self.max_terms
        return EvalConfig(**changes)

    def quadrature_config(self) -> QuadratureConfig:
        r"""The quadrature config of the run."""
        if self.tol is None:
            return QuadratureConfig()
        return QuadratureConfig(tail_tol=1e-2 * self.tol)

    def grid(self) -> list[float]:
        r"""The points of a table."""
        return [float(x) for x in np.linspace(self.x_min, self.x_max, self.x_steps)]


class QtrigGroup(click.Group):
    r"""A click group whose usage errors exit with code 1."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


def _validate_q(ctx, param, value):  # pylint: disable=unused-argument
    values = value if isinstance(value, tuple) else (value,)
    for q in values:
        try:
            QParam(q)
        except DomainError as e:
            raise click.BadParameter(str(e)) from e
    return value


def _common_options(multiple_q: bool = False):
    r"""The options shared by every subcommand."""
    q_option = click.option(
        "--q",
        "q",
        type=float,
        multiple=multiple_q,
        default=(0.5,) if multiple_q else 0.5,
        show_default=True,
        callback=_validate_q,
        help="Deformation parameter in (0, 1)" + (" (repeatable)." if multiple_q else "."),
    )
    options = [
        q_option,
        click.option(
            "--tol",
            type=click.FloatRange(min=0, min_open=True),
            default=None,
            help="Relative tolerance of the series (defaults to the settings).",
        ),
        click.option(
            "--max-terms",
            type=click.IntRange(min=8),
            default=None,
            help="Term cap of the series (defaults to the settings).",
        ),
        click.option(
            "--format",
            "output_format",
            type=click.Choice(["csv", "json"]),
            default="csv",
            show_default=True,
            help="Output format.",
        ),
        click.option("--seed", type=int, default=None, help="Seed of the randomized sweeps."),
        click.option(
            "--out",
            type=click.File("w", encoding="utf-8"),
            default="-",
            show_default=True,
            help="Output file ('-' for stdout).",
        ),
    ]

    def decorator(fn):
        for option in reversed(options):
            fn = option(fn)
        return fn

    return decorator


def _reports_errors(fn):
    r"""Turns qtrig errors raised by a subcommand into an error record and exit code 2."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except QtrigError as e:
            log.error("%s: %s", type(e).__name__, e)
            kwargs["out"].write(json.dumps(e.to_record()) + "\n")
            click.get_current_context().exit(EXIT_EVALUATION)

    return wrapper


def _resolve_seed(seed: Optional[int]) -> int:
    seed = settings.SEED if seed is None else seed
    click.echo(f"seed={seed}", err=True)
    return seed


def _json_value(value: Any) -> Any:
    if isinstance(value, list):
        return [_json_value(v) for v in value]
    if isinstance(value, float) and not np.isfinite(value):
        return None
    return value


def _emit(records: list[dict[str, Any]], columns: list[str], output_format: str, out: TextIO):
    r"""Writes records as CSV (fixed header, ``.`` decimals) or as a JSON array of objects.

    JSON output is strict: non-finite floats are written as ``null``.
    """
    if output_format == "json":
        strict = [{key: _json_value(value) for key, value in r.items()} for r in records]
        out.write(json.dumps(strict, indent=2, allow_nan=False) + "\n")
        return
    frame = pd.DataFrame.from_records(records, columns=columns)
    out.write(frame.to_csv(index=False, lineterminator="\n"))


def _value_record(value) -> dict[str, Any]:
    return {
        "value_re": float(value.real),
        "value_im": float(value.imag),
        "error_estimate": float(value.error_estimate),
    }


@click.group(cls=QtrigGroup)
@click.version_option(package_name="qtrig", prog_name="qtrig")
def cli():
    """
    q-trigonometry toolkit: q-exponentials, q-sine and q-cosine, Jackson calculus.

    Examples:

        qtrig eval cosq --x 0.3 --q 0.5

        qtrig check all --q 0.5 --seed 7

        qtrig daehee-limit --n-max 50 --q 0.7
    """


@cli.command("eval")
@click.argument("fn_name", type=click.Choice(list(FUNCTION_NAMES) + ["daehee"]))
@click.option("--x", type=float, default=None, help="The argument (not used by daehee).")
@_common_options()
@_reports_errors
def eval_command(fn_name, x, q, tol, max_terms, output_format, seed, out):
    """
    Evaluate one function at one point.

    Examples:

        qtrig eval cosq --x 0 --q 0.5

        qtrig eval daehee --q 0.999
    """
    _resolve_seed(seed)
    run = RunConfig(qs=(q,), tol=tol, max_terms=max_terms, output_format=output_format)
    if fn_name == "daehee":
        value = daehee_constant(run.q, run.eval_config())
    else:
        if x is None:
            raise click.UsageError(f"{fn_name} needs an argument: pass --x.")
        value = QFunctionHandle(FUNCTION_NAMES[fn_name], run.q)(x, run.eval_config())
    record = {"function": fn_name, "x": x, "q": run.q, **_value_record(value)}
    record["terms_used"] = value.terms_used
    _emit([record], EVAL_COLUMNS, output_format, out)


@cli.command("table")
@click.argument("fn_name", type=click.Choice(list(FUNCTION_NAMES)))
@click.option("--x-min", type=float, default=0.0, show_default=True, help="First point.")
@click.option("--x-max", type=float, default=1.0, show_default=True, help="Last point.")
@click.option(
    "--x-steps", type=click.IntRange(min=1), default=11, show_default=True, help="Number of points."
)
@_common_options()
def table_command(fn_name, x_min, x_max, x_steps, q, tol, max_terms, output_format, seed, out):
    """
    Tabulate a function on evenly spaced points.

    Points where the evaluation fails carry the name of the error in the status column
    instead of values. The exit code is 0 if any point succeeded.

    Examples:

        qtrig table sinq --x-min 0 --x-max 1 --x-steps 3 --q 0.5

        qtrig table tanq --x-min -1 --x-max 1 --q 0.5 --format json
    """
    _resolve_seed(seed)
    if x_min > x_max:
        raise click.BadParameter("--x-min must not exceed --x-max.", param_hint="--x-min")
    run = RunConfig(
        qs=(q,),
        x_min=x_min,
        x_max=x_max,
        x_steps=x_steps,
        tol=tol,
        max_terms=max_terms,
        output_format=output_format,
    )
    handle = QFunctionHandle(FUNCTION_NAMES[fn_name], run.q)
    cfg = run.eval_config()

    records = []
    for x in run.grid():
        try:
            record = {"x": x, **_value_record(handle(x, cfg)), "status": "ok"}
        except QtrigError as e:
            log.info("%s(%s): %s", fn_name, x, e)
            record = {"x": x, "value_re": None, "value_im": None, "error_estimate": None}
            record["status"] = type(e).__name__
        records.append(record)

    _emit(records, TABLE_COLUMNS, output_format, out)
    if not any(r["status"] == "ok" for r in records):
        click.get_current_context().exit(EXIT_EVALUATION)


@cli.command("check")
@click.argument("identity_set_name", type=click.Choice(["all"] + list(IDENTITY_SETS)))
@click.option(
    "--samples",
    type=click.IntRange(min=1),
    default=None,
    help="Samples per randomized identity (defaults to the settings).",
)
@click.option("--progress/--no-progress", default=False, help="Draw a progress bar on stderr.")
@_common_options(multiple_q=True)
@_reports_errors
def check_command(
    identity_set_name, samples, progress, q, tol, max_terms, output_format, seed, out
):
    """
    Check a set of identities, once per --q.

    One report is written per identity and per q. The exit code is 3 if any report fails. In
    the errata set a pass confirms that an uncorrected statement fails as predicted.

    Examples:

        qtrig check all --q 0.5 --seed 7

        qtrig check addition --q 0.5 --q 0.999
    """
    seed = _resolve_seed(seed)
    run = RunConfig(qs=tuple(q), tol=tol, max_terms=max_terms, output_format=output_format)
    ctx = SweepContext(
        cfg=run.eval_config(),
        quadrature=run.quadrature_config(),
        n_samples=samples or settings.SWEEP_SAMPLES,
    )
    identities = identity_set(identity_set_name)

    total = len(identities) * len(run.qs)
    with ProgressBar(total, visible=progress and settings.PROGRESSBAR) as bar:
        reports = check_identities(identities, run.qs, seed, ctx, on_step=bar.step)

    records = [r.to_dict() for r in reports]
    if output_format == "csv":
        for record in records:
            record["argmax_input"] = json.dumps(record["argmax_input"])
    _emit(records, REPORT_COLUMNS, output_format, out)

    failed = [r.identity_id for r in reports if not r.passed]
    if failed:
        log.warning("Failed identities: %s", ", ".join(failed))
    if not all_passed(reports):
        click.get_current_context().exit(EXIT_CHECK_FAILED)


@cli.command("daehee-limit")
@click.option(
    "--n-max", type=click.IntRange(min=1), default=50, show_default=True, help="Last n."
)
@_common_options()
@_reports_errors
def daehee_limit_command(n_max, q, tol, max_terms, output_format, seed, out):
    """
    Tabulate the sequence (1 (+)_q 1/[n]_q)^n and its distance to the Daehee constant.

    Examples:

        qtrig daehee-limit --n-max 50 --q 0.5
    """
    _resolve_seed(seed)
    run = RunConfig(qs=(q,), tol=tol, max_terms=max_terms, output_format=output_format)
    constant = daehee_constant(run.q, run.eval_config()).real
    records = []
    for n in range(1, n_max + 1):
        term = daehee_sequence_term(n, run.q)
        records.append({"n": n, "value": term.value, "gap": abs(term.value - constant)})
    _emit(records, LIMIT_COLUMNS, output_format, out)


def main():
    r"""Entry point of the ``qtrig`` console script."""
    cli(prog_name="qtrig")  # pylint: disable=no-value-for-parameter


if __name__ == "__main__":  # pragma: no cover
    main()
